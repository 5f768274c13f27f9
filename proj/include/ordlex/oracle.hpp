#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ordlex/automata.hpp"
#include "ordlex/grammar.hpp"
#include "ordlex/lexword.hpp"
#include "ordlex/ordinal.hpp"
#include "ordlex/scatter.hpp"
#include "ordlex/synth.hpp"

namespace ordlex {

struct EnumSample {
  std::vector<Word> words;  // strictly increasing in <lex
  std::size_t length_cap = 0;
  bool complete_to_cap = true;
};

/// Every word of L(G) with length <= cap (at most 20), sorted by <lex under
/// the grammar's alphabet.
EnumSample enumerate_words(const Grammar& g, std::size_t cap);

/// Bottom-up span recognizer; handles empty and unit rules. Answers are cached.
class Membership {
public:
  explicit Membership(const Grammar& g);
  bool contains(std::string_view w);

private:
  const Grammar* g_;
  std::vector<bool> nullable_;
  std::unordered_map<std::string, bool> cache_;
};

/// x v^i y z^i w in L(G) for every checked i, with consecutive members
/// strictly decreasing. With y = z = "" this is the plain pumping family
/// x v^i w, which descends iff v w <s w. Otherwise v and z pump together
/// and v y <s y makes the family descend.
struct DescendingEvidence {
  Word x;
  Word v;
  Word y;
  Word z;
  Word w;

  bool paired() const { return !z.empty(); }
  Word member(std::size_t i) const;
};

/// Searches the sample (shortest words first) for a decomposition whose
/// members for i = 0..pump_checks all belong to L(G). Evidence only: for
/// non-regular G a bounded family does not prove an infinite chain.
std::optional<DescendingEvidence> find_descending_evidence(const Grammar& g, const EnumSample& sample,
                                                           std::size_t pump_checks);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
  std::vector<Word> witnesses;
};

struct ConsistencyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

/// Everything known about one grammar; absent pieces skip their checks.
struct ValidationInputs {
  const ScatterReport* scatter = nullptr;
  const RankBoundReport* bound = nullptr;
  const Dfa* dfa = nullptr;  // present iff the language is regular by construction
  CertPtr certificate;
  std::optional<Ordinal> expected_type;
  std::size_t max_length = 12;
  std::size_t initial_segment = 50;
  std::size_t pump_checks = 8;
};

/// Checks: scattered verdict against the automaton; order type against the
/// lex-first words; certificate enumeration against grammar enumeration;
/// rank bound against exact rank; descending triple memberships.
ConsistencyReport cross_validate(const Grammar& g, const ValidationInputs& in);

}  // namespace ordlex
