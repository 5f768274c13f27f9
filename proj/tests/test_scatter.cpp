#include <doctest.h>

#include <deque>

#include "ordlex/error.hpp"
#include "ordlex/scatter.hpp"
#include "support/brute.hpp"
#include "support/suites.hpp"

using namespace ordlex;

namespace {

Grammar gnf(const std::string& text) {
  auto r = reduce_grammar(parse_grammar(text));
  REQUIRE(r);
  auto g = to_gnf(*r);
  REQUIRE(g.grammar);
  return *g.grammar;
}

// Words w with X =>+ w Y ... by leftmost steps on a GNF grammar: each step
// appends one letter, so bounding |w| bounds the search.
std::set<Word> brute_prefixes(const Grammar& g, std::size_t x, std::size_t y, std::size_t n) {
  std::set<Word> out;
  std::deque<std::pair<Word, std::vector<std::size_t>>> queue{{Word{}, {x}}};
  bool first = true;
  while (!queue.empty()) {
    auto [w, stack] = std::move(queue.front());
    queue.pop_front();
    if (!first && !stack.empty() && stack.front() == y) out.insert(w);
    first = false;
    if (stack.empty() || w.size() == n) continue;
    for (const Rhs& rhs : g.rules(stack.front())) {
      std::vector<std::size_t> next;
      for (std::size_t i = 1; i < rhs.size(); ++i) next.push_back(rhs[i].index());
      next.insert(next.end(), stack.begin() + 1, stack.end());
      queue.push_back({w + rhs[0].letter(), std::move(next)});
    }
  }
  return out;
}

RankExpr leaf(std::uint64_t n) { return {RankExpr::Op::Leaf, Ordinal::finite(n), {}}; }

MarkingTable canonical(const Dfa& d) { return regular_scattered_rank(d).marking; }

// 0* with the initial state off the loop, so its value can disagree with
// its children.
Dfa zeros_unrolled() { return Dfa({{1, 2}, {1, 2}, {2, 2}}, {true, true, false}, 0); }

}  // namespace

TEST_CASE("left_prefix_grammar examples") {
  const Grammar g = gnf("S -> 1 S A | 0\nA -> 1 A | 0");
  const std::size_t s = *g.find("S");
  const std::size_t a = *g.find("A");
  const auto ss = left_prefix_grammar(g, s, s);
  REQUIRE(ss);
  CHECK(brute::language(*ss, 6) == std::set<Word>{"1", "11", "111", "1111", "11111", "111111"});
  CHECK_FALSE(left_prefix_grammar(g, a, s));
  CHECK_THROWS_AS(left_prefix_grammar(parse_grammar("S -> S 0 | 1"), 0, 0), PreconditionError);
}

TEST_CASE("left_prefix_grammar matches leftmost derivations") {
  const char* grammars[] = {
      "S -> 1 S A | 0\nA -> 1 A | 0", "S -> 0 S A | 1\nA -> 0", "S -> 0 S | 1 S | 0",
      "S -> 0 A | 1\nA -> 1 S | 0 A S", "S -> S S | 0 1", "S -> 0 S 1 | 0 1",
  };
  for (const char* text : grammars) {
    CAPTURE(text);
    const Grammar g = gnf(text);
    for (std::size_t x = 0; x < g.size(); ++x) {
      for (std::size_t y = 0; y < g.size(); ++y) {
        const auto want = brute_prefixes(g, x, y, 6);
        const auto lp = left_prefix_grammar(g, x, y);
        CHECK(lp.has_value() == !brute_prefixes(g, x, y, 12).empty());
        if (lp) CHECK(brute::language(*lp, 6) == want);
      }
    }
  }
}

TEST_CASE("check_scattered_cfg examples") {
  auto r = check_scattered_cfg(gnf("S -> 0 S A | 1\nA -> 0"));
  CHECK(r.scattered);
  REQUIRE(r.certificates.size() == 1);
  CHECK(r.certificates[0].u0 == "0");
  CHECK(r.certificates[0].conjugacy_consistent);

  r = check_scattered_cfg(gnf("S -> 1 S A | 0\nA -> 1 A | 0"));
  CHECK(r.scattered);
  CHECK(r.certificates.size() == 2);
  for (const auto& c : r.certificates) CHECK(c.u0 == "1");

  r = check_scattered_cfg(gnf("S -> 0 1"));
  CHECK(r.scattered);
  CHECK(r.certificates.empty());
}

TEST_CASE("dense grammars fail with genuine counterexamples") {
  const Grammar g = gnf("S -> 0 S | 1 S | 0");
  const auto r = check_scattered_cfg(g);
  CHECK_FALSE(r.scattered);
  REQUIRE(r.failure);
  const auto& f = *r.failure;
  const auto lp = left_prefix_grammar(g, f.x, f.y);
  REQUIRE(lp);
  const auto prefixes = brute::language(*lp, 8);
  CHECK(prefixes.count(f.counterexample));
  for (const auto& c : f.candidates) {
    CHECK(prefixes.count(c.counterexample));
    CHECK_FALSE(in_power_prefix(c.candidate.v0, c.candidate.v1, c.counterexample));
  }
}

TEST_CASE("certificates hold on the enumerated prefix languages") {
  for (const auto& c : suites::right_linear_suite()) {
    CAPTURE(c.text);
    const Grammar g = gnf(c.text);
    const auto r = check_scattered_cfg(g);
    CHECK(r.scattered == c.scattered);
    for (const auto& cert : r.certificates) {
      CHECK(is_primitive(cert.u0));
      for (const auto& [xy, pair] : cert.pairs) {
        CHECK(pair.v1.size() < pair.v0.size());
        for (const Word& w : brute_prefixes(g, xy.first, xy.second, 8)) CHECK(in_power_prefix(pair.v0, pair.v1, w));
      }
    }
  }
}

TEST_CASE("rank bound examples") {
  Grammar g = gnf("S -> 1 S A | 0\nA -> 1 A | 0");
  auto s = structure(g);
  auto b = rank_bound_cfg(g, s, check_scattered_cfg(g));
  CHECK(b.per_nonterminal[*g.find("A")] == Ordinal::finite(2));
  CHECK(b.per_nonterminal[*g.find("S")] == parse_ordinal("w+1"));
  CHECK(b.overall == parse_ordinal("w+1"));

  g = gnf("S -> 0 S | 0");
  s = structure(g);
  CHECK(rank_bound_cfg(g, s, check_scattered_cfg(g)).overall == Ordinal::finite(2));

  g = gnf("S -> 0 1 | 1");
  s = structure(g);
  CHECK(rank_bound_cfg(g, s, check_scattered_cfg(g)).overall == Ordinal{});

  g = gnf("S -> 0 S | 1 S | 0");
  s = structure(g);
  CHECK_THROWS_AS(rank_bound_cfg(g, s, check_scattered_cfg(g)), PreconditionError);
}

TEST_CASE("rank bounds dominate exact regular ranks") {
  for (const auto& c : suites::right_linear_suite()) {
    if (!c.scattered) continue;
    CAPTURE(c.text);
    const Grammar g = gnf(c.text);
    const auto b = rank_bound_cfg(g, structure(g), check_scattered_cfg(g));
    CHECK(regular_scattered_rank(suites::dfa_of(c.text)).rank <= b.overall);
  }
}

TEST_CASE("rank calculus examples") {
  auto v = rank_calculus({RankExpr::Op::Union, {}, {leaf(1), leaf(1)}});
  CHECK(v.value == Ordinal::finite(1));
  CHECK(v.tight);
  v = rank_calculus({RankExpr::Op::Concat, {}, {leaf(1), leaf(1)}});
  CHECK(v.value == Ordinal::finite(2));
  CHECK_FALSE(v.tight);
  v = rank_calculus({RankExpr::Op::Subst, {}, {leaf(2), leaf(3)}});
  CHECK(v.value == Ordinal::finite(5));
  CHECK_FALSE(v.tight);
  v = rank_calculus(parse_rank_expr("shuffle(w, 3, 1)"));
  CHECK(v.value == Ordinal::omega());
  CHECK(v.tight);
  // concat(K, L) is bounded by r(L) + r(K): the right operand comes first.
  CHECK(rank_calculus(parse_rank_expr("concat(w, 1)")).value == parse_ordinal("w"));
  CHECK(rank_calculus(parse_rank_expr("concat(1, w)")).value == parse_ordinal("w+1"));
  CHECK(rank_calculus(parse_rank_expr("union(1, concat(w, 2))")).value == parse_ordinal("w"));
  CHECK(rank_calculus(parse_rank_expr("w^2+1")).value == parse_ordinal("w^2+1"));
}

TEST_CASE("rank calculus errors") {
  CHECK_THROWS_AS(rank_calculus({RankExpr::Op::Concat, {}, {leaf(1)}}), PreconditionError);
  CHECK_THROWS_AS(parse_rank_expr("join(1, 2)"), ParseError);
  CHECK_THROWS_AS(parse_rank_expr("union(1, 2"), ParseError);
  CHECK_THROWS_AS(parse_rank_expr(""), ParseError);
}

TEST_CASE("merge examples") {
  const Dfa zeros = suites::dfa_of("S -> 0 S | _eps");
  const Dfa ones_zero = suites::dfa_of("S -> 1 S | 0");
  const Dfa twice = suites::dfa_of(suites::ones_zero_power(2));

  auto m = merge_markings(zeros, canonical(zeros), Dfa::empty(), canonical(Dfa::empty()));
  CHECK(m.marking.value[m.dfa.initial()] == Ordinal::finite(1));
  m = merge_markings(zeros, canonical(zeros), ones_zero, canonical(ones_zero));
  CHECK(m.marking.value[m.dfa.initial()] == Ordinal::finite(1));
  CHECK(validate_marking(m.dfa, m.marking, 10).valid);
  m = merge_markings(twice, canonical(twice), zeros, canonical(zeros));
  CHECK(m.marking.value[m.dfa.initial()] == Ordinal::finite(2));
  for (const Word& w : brute::all_words("01", 8)) CHECK(m.dfa.accepts(w) == (twice.accepts(w) || zeros.accepts(w)));

  MarkingTable bad = canonical(zeros);
  bad.value[zeros.initial()] = Ordinal{};
  CHECK_THROWS_AS(merge_markings(zeros, bad, ones_zero, canonical(ones_zero)), PreconditionError);
}

TEST_CASE("merged markings are valid for every suite pair") {
  const auto suite = suites::regular_suite();
  for (std::size_t i = 0; i < suite.size(); ++i) {
    for (std::size_t j = i; j < suite.size(); ++j) {
      CAPTURE(suite[i].name);
      CAPTURE(suite[j].name);
      const auto m = merge_markings(suite[i].dfa, canonical(suite[i].dfa), suite[j].dfa, canonical(suite[j].dfa));
      CHECK(validate_marking(m.dfa, m.marking, 8).valid);
      CHECK(m.marking.value[m.dfa.initial()] == ord_max(suite[i].rank, suite[j].rank));
    }
  }
}

TEST_CASE("validate_marking examples") {
  const Dfa zeros = suites::dfa_of("S -> 0 S | _eps");
  CHECK(validate_marking(zeros, canonical(zeros), 10).valid);

  const Dfa unrolled = zeros_unrolled();
  CHECK(validate_marking(unrolled, MarkingTable{{Ordinal::finite(1), Ordinal::finite(1), Ordinal{}}}, 10).valid);
  auto check = validate_marking(unrolled, MarkingTable{{Ordinal::finite(2), Ordinal::finite(1), Ordinal{}}}, 10);
  CHECK_FALSE(check.valid);
  CHECK(check.condition == MarkingCondition::MaxOfChildren);

  REQUIRE(check.node);
  CHECK(*check.node == "");

  // A self-loop may carry any positive value: markings bound the rank.
  MarkingTable loose = canonical(zeros);
  loose.value[zeros.initial()] = Ordinal::finite(2);
  CHECK(validate_marking(zeros, loose, 10).valid);

  check = validate_marking(unrolled, MarkingTable{{Ordinal{}, Ordinal{}, Ordinal{}}}, 10);
  CHECK_FALSE(check.valid);
  CHECK(check.condition == MarkingCondition::Finiteness);

  check = validate_marking(Dfa::universal(), MarkingTable{{Ordinal::finite(1)}}, 10);
  CHECK_FALSE(check.valid);
  CHECK(check.condition == MarkingCondition::FinitePaths);
  REQUIRE(check.node);
  CHECK(*check.node == "");

  CHECK_THROWS_AS(validate_marking(zeros, canonical(zeros), 17), PreconditionError);
}

TEST_CASE("canonical markings of the suite are valid") {
  for (const auto& c : suites::regular_suite()) {
    CAPTURE(c.name);
    CHECK(validate_marking(c.dfa, canonical(c.dfa), 12).valid);
  }
}
