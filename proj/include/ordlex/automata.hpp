#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordlex/grammar.hpp"
#include "ordlex/lexword.hpp"
#include "ordlex/ordinal.hpp"

namespace ordlex {

/// A complete DFA over 0 < 1. States are dense indices; the right language of
/// a state is its residual. `live(q)` holds iff that residual is non-empty.
class Dfa {
public:
  using State = std::size_t;

  Dfa(std::vector<std::array<State, 2>> delta, std::vector<bool> accepting, State initial);

  static Dfa empty();
  static Dfa universal();
  /// v0* v1, with v1 a proper prefix of v0.
  static Dfa power_prefix(std::string_view v0, std::string_view v1);
  /// Words strictly below w in <lex.
  static Dfa lex_below(std::string_view w);
  /// A finite language.
  static Dfa from_words(const std::vector<Word>& words);

  std::size_t size() const { return delta_.size(); }
  State initial() const { return initial_; }
  State next(State q, int bit) const { return delta_[q][bit]; }
  State next(State q, char letter) const { return delta_[q][letter == '1' ? 1 : 0]; }
  bool accepting(State q) const { return accepting_[q]; }
  bool live(State q) const { return live_[q]; }

  State run(State q, std::string_view w) const;
  bool accepts(std::string_view w) const;

  std::vector<bool> reachable() const;
  /// Shortest word leading from the initial state to q (0 before 1 on ties).
  std::optional<Word> access_word(State q) const;
  /// Shortest word from `from` to `to` (empty when equal).
  std::optional<Word> path_word(State from, State to) const;
  std::optional<Word> shortest_accepted_from(State q) const;

  /// Reachable part with every dead state merged into one.
  Dfa trimmed() const;
  Dfa complement() const;

  /// Per state: an infinite residual (a live cycle is reachable).
  std::vector<bool> infinite_residual() const;

private:
  std::vector<std::array<State, 2>> delta_;
  std::vector<bool> accepting_;
  State initial_;
  std::vector<bool> live_;
};

Dfa intersect(const Dfa& a, const Dfa& b);
Dfa unite(const Dfa& a, const Dfa& b);

/// Strongly connected components of the graph restricted to `keep`;
/// returns component ids (SIZE_MAX outside `keep`) and a per-state cycle flag.
struct SccInfo {
  std::vector<std::size_t> component;
  std::vector<bool> on_cycle;
  std::size_t count = 0;
};
SccInfo dfa_components(const Dfa& d, const std::vector<bool>& keep);

/// Right-linear grammar (runs of terminals, optionally one trailing
/// nonterminal) over 0 < 1 to a trimmed DFA. Honors the epsilon flag.
/// Throws PreconditionError otherwise.
Dfa right_linear_to_dfa(const Grammar& g);

/// Words of L(D) with length <= max_length, in <lex order.
std::vector<Word> dfa_words(const Dfa& d, std::size_t max_length);

/// The first n words of L(D) in <lex order. Requires a well-ordered language.
std::vector<Word> dfa_lex_first(const Dfa& d, std::size_t n);

struct InclusionResult {
  bool holds = true;
  std::optional<Word> counterexample;  // a shortest word of L(G) \ L(R)
};

/// L(G) subset of L(R), decided on the product of G with the complement of R.
InclusionResult cfg_regular_inclusion(const Grammar& g, const Dfa& r);

/// A shortest word in L(G) intersected with L(D), if any.
std::optional<Word> shortest_word_in(const Grammar& g, const Dfa& d);

/// Ordinal value per DFA state; the marking of the tree is u -> value(run(u)).
struct MarkingTable {
  std::vector<Ordinal> value;

  bool operator==(const MarkingTable&) const = default;
};

/// Two prefix-incomparable loops x <s y at a live state: a copy of the
/// rationals embeds below `access`.
struct DenseWitness {
  Dfa::State state = 0;
  Word access;
  Word x;
  Word y;
};

struct RegularRank {
  bool scattered = true;
  Ordinal rank;
  MarkingTable marking;
  std::optional<DenseWitness> witness;
};

/// Exact Hausdorff rank of (L(D), <lex) by peeling: finite residuals get 0,
/// then round k assigns k to every state whose unassigned unfolding is a
/// finite union of paths.
RegularRank regular_scattered_rank(const Dfa& d);

struct DescentWitness {
  Word u;
  Word v;
  Word w;
};

struct WellOrderResult {
  bool well_ordered = true;
  std::optional<DescentWitness> descent;  // u v^n w strictly decreasing
};

WellOrderResult regular_well_ordered(const Dfa& d);

/// Order type of (L(D), <lex). Throws PreconditionError if not well-ordered.
Ordinal regular_order_type(const Dfa& d);

}  // namespace ordlex
