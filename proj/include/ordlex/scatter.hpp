#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ordlex/automata.hpp"
#include "ordlex/grammar.hpp"
#include "ordlex/lexword.hpp"
#include "ordlex/ordinal.hpp"

namespace ordlex {

/// The language {w : X =>+ w Y p} of terminal words that can precede Y along
/// a leftmost derivation from X. Requires a reduced GNF grammar. nullopt when
/// the language is empty.
std::optional<Grammar> left_prefix_grammar(const Grammar& g, std::size_t x, std::size_t y);

struct ComponentCertificate {
  std::vector<std::size_t> component;
  Word u0;
  /// (X, Y) -> (v0, v1) with prefix language of (X, Y) inside v0* v1.
  std::map<std::pair<std::size_t, std::size_t>, ConjugatePair> pairs;
  /// Every recursive member pumps a conjugate of u0.
  bool conjugacy_consistent = true;
};

struct CandidateCounterexample {
  ConjugatePair candidate;
  Word counterexample;
};

struct ScatterFailure {
  std::vector<std::size_t> component;
  std::size_t x = 0;
  std::size_t y = 0;
  Word u0;
  /// A prefix word of (X, Y) that fits no v0* v1 candidate when one exists
  /// among the per-candidate counterexamples, else the first of them.
  Word counterexample;
  std::vector<CandidateCounterexample> candidates;
};

struct ScatterReport {
  bool scattered = true;
  std::vector<ComponentCertificate> certificates;
  std::optional<ScatterFailure> failure;
};

/// Decides scatteredness of L(G) for a reduced GNF grammar over 0 < 1: every
/// strong component with a recursive member must have a primitive u0 such
/// that each prefix language of a pair in the component sits inside v0* v1
/// for a rotation v0 of u0 and a proper prefix v1 of v0.
ScatterReport check_scattered_cfg(const Grammar& g);

struct RankBoundReport {
  std::vector<Ordinal> per_nonterminal;
  Ordinal overall;
};

/// Upper bounds on the Hausdorff rank of L(X): w^h + 1 for recursive X of
/// height h, 0 for finite languages, and for other non-recursive X the
/// largest reversed sum of child bounds over its productions.
RankBoundReport rank_bound_cfg(const Grammar& g, const StructureReport& s, const ScatterReport& verdict);

/// Rank expressions over operands of known rank.
struct RankExpr {
  enum class Op { Leaf, Union, Shuffle, Concat, Subst };

  Op op = Op::Leaf;
  Ordinal leaf;
  std::vector<RankExpr> args;
};

struct RankValue {
  Ordinal value;
  bool tight = true;  // false when the value is only an upper bound
};

/// Union and shuffle give the max of the operands; concat(K, L) is bounded by
/// r(L) + r(K); subst(K, sup L_w) by beta + alpha. Throws PreconditionError on
/// a wrong operand count.
RankValue rank_calculus(const RankExpr& e);

/// "union(1, concat(w, 2))", "subst(2, 3)", or a bare ordinal. Throws ParseError.
RankExpr parse_rank_expr(std::string_view text);

struct MarkedDfa {
  Dfa dfa;
  MarkingTable marking;
};

/// Pointwise max of two markings on the product automaton for L0 union L1.
/// Throws PreconditionError if either input marking is invalid.
MarkedDfa merge_markings(const Dfa& d0, const MarkingTable& m0, const Dfa& d1, const MarkingTable& m1);

enum class MarkingCondition { Finiteness, MaxOfChildren, FinitePaths };

struct MarkingCheck {
  bool valid = true;
  std::optional<MarkingCondition> condition;
  std::optional<Word> node;
};

/// Checks the three marking conditions on the tree of live prefixes, visiting
/// nodes breadth-first to the given depth (at most 16).
MarkingCheck validate_marking(const Dfa& d, const MarkingTable& m, std::size_t depth);

}  // namespace ordlex
