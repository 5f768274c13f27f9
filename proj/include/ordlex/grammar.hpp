#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordlex/lexword.hpp"

namespace ordlex {

struct Symbol {
  enum class Kind : std::uint8_t { Terminal, Nonterminal };

  Kind kind = Kind::Terminal;
  std::uint32_t id = 0;  // letter for terminals, index for nonterminals

  static Symbol terminal(char letter) {
    return {Kind::Terminal, static_cast<std::uint32_t>(static_cast<unsigned char>(letter))};
  }
  static Symbol nonterminal(std::size_t index) {
    return {Kind::Nonterminal, static_cast<std::uint32_t>(index)};
  }

  bool is_terminal() const { return kind == Kind::Terminal; }
  char letter() const { return static_cast<char>(id); }
  std::size_t index() const { return id; }

  auto operator<=>(const Symbol&) const = default;
};

using Rhs = std::vector<Symbol>;

struct GrammarFlags {
  bool reduced = false;
  bool gnf = false;
  bool epsilon_in_language = false;  // set when epsilon has been split off
};

/// A context-free grammar over an ordered alphabet. Nonterminals are dense
/// indices with printable names; each nonterminal owns a duplicate-free list
/// of right-hand sides in insertion order.
class Grammar {
public:
  explicit Grammar(OrderedAlphabet alphabet = OrderedAlphabet::binary());

  const OrderedAlphabet& alphabet() const { return alphabet_; }

  /// Throws PreconditionError on a duplicate name.
  std::size_t add_nonterminal(std::string name);
  std::size_t intern(const std::string& name);
  std::optional<std::size_t> find(std::string_view name) const;

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t nt) const { return names_.at(nt); }
  const std::vector<Rhs>& rules(std::size_t nt) const { return rules_.at(nt); }
  std::size_t rule_count() const;

  /// Adds lhs -> rhs unless already present. Checks that every symbol is declared.
  void add_rule(std::size_t lhs, Rhs rhs);
  void set_rules(std::size_t lhs, std::vector<Rhs> rhss);

  std::size_t start() const { return start_; }
  void set_start(std::size_t nt);

  GrammarFlags& flags() { return flags_; }
  const GrammarFlags& flags() const { return flags_; }

  /// A name of the form _G<k> not yet in use.
  std::string fresh_name() const;

private:
  OrderedAlphabet alphabet_;
  std::vector<std::string> names_;
  std::vector<std::vector<Rhs>> rules_;
  std::size_t start_ = 0;
  GrammarFlags flags_;
};

/// Grammar file format: optional "# terminals: a < b < ..." header (default
/// 0 < 1), then one "X -> RHS | RHS" rule per line. The first rule's left side
/// is the start symbol. Throws ParseError carrying the 1-based line number.
Grammar parse_grammar(std::string_view text);

/// Inverse of parse_grammar for grammars whose names are valid identifiers.
std::string to_text(const Grammar& g);

std::string rhs_text(const Grammar& g, const Rhs& rhs);

/// Drops unproductive, then unreachable nonterminals. nullopt means L(G) is empty.
std::optional<Grammar> reduce_grammar(const Grammar& g);

/// Maps every letter to its binary codeword; identity on 0 < 1 grammars.
Grammar encode_binary(const Grammar& g);

std::vector<bool> nullable_nonterminals(const Grammar& g);

struct GnfResult {
  std::optional<Grammar> grammar;  // nullopt when L(G) - {eps} is empty
  bool epsilon_in_language = false;
};

/// Epsilon-free, reduced Greibach normal form for L(G) - {eps}.
GnfResult to_gnf(const Grammar& g);

/// Every right side is one terminal followed by nonterminals only.
bool is_gnf(const Grammar& g);

/// Every right side is a run of terminals optionally ending in one nonterminal.
bool is_right_linear(const Grammar& g);

struct StructureReport {
  /// Strong components, ordered by smallest member; members ascending.
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> component_of;
  /// reaches[c][d]: some member of c derives a form containing a member of d.
  std::vector<std::vector<bool>> reaches;
  /// Longest strict chain of components reachable downward from c.
  std::vector<std::size_t> height;
  /// Per nonterminal: X =>+ pXq.
  std::vector<bool> recursive;

  std::size_t height_of(std::size_t nt) const { return height[component_of[nt]]; }
};

StructureReport structure(const Grammar& g);

}  // namespace ordlex
