#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordlex/automata.hpp"
#include "ordlex/grammar.hpp"
#include "ordlex/oracle.hpp"
#include "ordlex/scatter.hpp"
#include "ordlex/synth.hpp"

namespace ordlex {

struct AnalysisOptions {
  std::size_t enum_cap = 10;      // sample length for descending evidence
  std::size_t pump_checks = 8;
  std::size_t max_length = 12;    // certificate vs grammar enumeration
  CertPtr certificate;            // optional
  std::optional<Ordinal> expected_type;
};

/// Everything the pipeline learned about one grammar. The analysed language
/// is the binary encoding of the input, which has the same order type.
struct Analysis {
  std::string source;
  Grammar original;
  std::vector<std::string> transforms;
  Grammar binary;                    // encoded and reduced (when non-empty)
  bool empty_language = false;
  bool epsilon_in_language = false;
  std::optional<Grammar> gnf;        // absent when L - {eps} is empty
  std::optional<StructureReport> structure;
  std::optional<ScatterReport> scatter;
  std::optional<RankBoundReport> bound;
  std::optional<Dfa> dfa;            // present when the language is regular by construction
  std::optional<RegularRank> exact_rank;
  std::optional<WellOrderResult> well_order;
  std::optional<Ordinal> order_type;
  std::optional<DescendingEvidence> evidence;
  ConsistencyReport consistency;

  bool scattered() const;
};

Analysis analyze_grammar(const Grammar& g, const AnalysisOptions& options = {}, std::string source = "");

/// Versioned JSON report; keys are sorted so the output is canonical.
nlohmann::json analysis_json(const Analysis& a);
std::string analysis_text(const Analysis& a);

}  // namespace ordlex
