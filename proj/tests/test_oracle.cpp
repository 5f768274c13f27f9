#include <doctest.h>

#include "ordlex/error.hpp"
#include "ordlex/oracle.hpp"
#include "support/brute.hpp"
#include "support/suites.hpp"

using namespace ordlex;

namespace {

const char* const kGrammars[] = {
    "S -> 1 S A | 0\nA -> 1 A | 0",
    "S -> 0 S A | 1\nA -> 0",
    "S -> 0 S | 1 S | 0",
    "S -> S S | 0 | 1 S 0",
    "S -> A\nA -> B | 0\nB -> A 1 | 1",
    "S -> 0 S 1 | _eps",
    "S -> A A\nA -> A 0 | B\nB -> 1 | _eps",
    "S -> S 0 | 1",
    "# terminals: c < b < a\nS -> a S | b | c S c",
};

bool strictly_sorted(const std::vector<Word>& words, const OrderedAlphabet& a) {
  for (std::size_t i = 1; i < words.size(); ++i) {
    if (!lex_less(words[i - 1], words[i], a)) return false;
  }
  return true;
}

std::optional<DescendingEvidence> evidence_for(const char* text, std::size_t cap = 10) {
  const Grammar g = parse_grammar(text);
  return find_descending_evidence(g, enumerate_words(g, cap), 6);
}

ConsistencyReport right_linear_report(const char* text, std::optional<Ordinal> expected = std::nullopt) {
  const Grammar g = parse_grammar(text);
  const Dfa d = right_linear_to_dfa(g);
  ValidationInputs in;
  in.dfa = &d;
  in.expected_type = expected;
  return cross_validate(g, in);
}

const CheckResult* find_check(const ConsistencyReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("enumerate_words examples") {
  auto s = enumerate_words(parse_grammar("S -> 1 S A | 0\nA -> 1 A | 0"), 4);
  CHECK(s.words == std::vector<Word>{"0", "100", "1010"});
  CHECK(s.length_cap == 4);
  CHECK(s.complete_to_cap);
  CHECK(enumerate_words(parse_grammar("S -> 0"), 4).words == std::vector<Word>{"0"});
  CHECK(enumerate_words(parse_grammar("S -> S A\nA -> 0"), 4).words.empty());
  CHECK(enumerate_words(parse_grammar("S -> 0 S | _eps"), 2).words == std::vector<Word>{"", "0", "00"});
  CHECK_THROWS_AS(enumerate_words(parse_grammar("S -> 0"), 21), PreconditionError);
}

TEST_CASE("enumeration is sorted, duplicate-free, and complete") {
  for (const char* text : kGrammars) {
    CAPTURE(text);
    const Grammar g = parse_grammar(text);
    const auto s = enumerate_words(g, 8);
    CHECK(strictly_sorted(s.words, g.alphabet()));
    CHECK(std::set<Word>(s.words.begin(), s.words.end()) == brute::language(g, 8));
  }
}

TEST_CASE("membership agrees with brute-force derivation") {
  for (const char* text : kGrammars) {
    CAPTURE(text);
    const Grammar g = parse_grammar(text);
    const auto lang = brute::language(g, 8);
    Membership m(g);
    for (const Word& w : brute::all_words(g.alphabet().letters(), 8)) CHECK(m.contains(w) == (lang.count(w) > 0));
  }
}

TEST_CASE("descending evidence examples") {
  auto e = evidence_for("S -> 0 S | 1");
  REQUIRE(e);
  CHECK(e->x == "");
  CHECK(e->v == "0");
  CHECK(e->w == "1");
  CHECK_FALSE(e->paired());
  CHECK(e->member(2) == "001");

  CHECK_FALSE(evidence_for("S -> 1 S | 0"));
  CHECK_FALSE(evidence_for("S -> 1 S A | 0\nA -> 1 A | 0"));

  e = evidence_for("S -> 0 S | 1 S | _eps");
  REQUIRE(e);
  CHECK(e->x == "");
  CHECK(e->v == "0");
  CHECK(e->w == "1");
}

TEST_CASE("paired evidence pumps two factors together") {
  const auto e = evidence_for("S -> 0 S A | 1\nA -> 0");
  REQUIRE(e);
  CHECK(e->paired());
  CHECK(e->v == "0");
  CHECK(e->y == "1");
  CHECK(e->z == "0");
  CHECK(e->member(2) == "00100");
}

TEST_CASE("evidence members belong to the language and descend") {
  for (const char* text : kGrammars) {
    CAPTURE(text);
    const Grammar g = parse_grammar(text);
    const auto e = find_descending_evidence(g, enumerate_words(g, 9), 5);
    if (!e) continue;
    const auto lang = brute::language(g, 9 + 5 * (e->v.size() + e->z.size()));
    CHECK(!e->v.empty());
    for (std::size_t i = 0; i <= 5; ++i) {
      CHECK(lang.count(e->member(i)));
      CHECK(lex_less(e->member(i + 1), e->member(i), g.alphabet()));
    }
    if (!e->paired()) CHECK(strictly_less(e->v + e->w, e->w, g.alphabet()));
  }
}

TEST_CASE("cross_validate examples") {
  const auto s = synth_grammar(parse_ordinal("w^w"));
  ValidationInputs in;
  in.certificate = s.certificate;
  in.expected_type = parse_ordinal("w^w");
  auto r = cross_validate(s.grammar, in);
  CHECK(r.all_passed());
  REQUIRE(find_check(r, "certificate_vs_enumeration"));

  r = right_linear_report("S -> 0 S | 1");
  CHECK(r.all_passed());
  const auto* descent = find_check(r, "descent_vs_membership");
  REQUIRE(descent);
  CHECK(descent->witnesses == std::vector<Word>{"", "0", "1"});
  CHECK_FALSE(find_check(r, "order_type_vs_enumeration"));

  r = right_linear_report("S -> 1 S | 0", Ordinal::omega());
  CHECK(r.all_passed());
  REQUIRE(find_check(r, "order_type_vs_enumeration"));
  CHECK_FALSE(find_check(r, "descent_vs_membership"));
}

TEST_CASE("cross_validate reports disagreements") {
  auto r = right_linear_report("S -> 1 S | 0", parse_ordinal("w+1"));
  CHECK_FALSE(r.all_passed());

  const auto s = synth_grammar(parse_ordinal("w*2"));
  ValidationInputs in;
  in.certificate = synth_certificate(parse_ordinal("w*3"));
  CHECK_FALSE(cross_validate(s.grammar, in).all_passed());

  const Grammar dense = parse_grammar("S -> 0 S | 1 S | 0");
  const Dfa d = right_linear_to_dfa(dense);
  ScatterReport wrong;
  wrong.scattered = true;
  in = ValidationInputs{};
  in.dfa = &d;
  in.scatter = &wrong;
  r = cross_validate(dense, in);
  const auto* c = find_check(r, "scattered_vs_regular");
  REQUIRE(c);
  CHECK_FALSE(c->passed);
}

TEST_CASE("the regular suite passes its own battery") {
  for (const auto& c : suites::regular_suite()) {
    CAPTURE(c.name);
    ValidationInputs in;
    in.dfa = &c.dfa;
    in.expected_type = c.order_type;
    // A grammar for the suite language: one nonterminal per state.
    Grammar built;
    for (std::size_t q = 0; q < c.dfa.size(); ++q) built.add_nonterminal("Q" + std::to_string(q));
    for (std::size_t q = 0; q < c.dfa.size(); ++q) {
      if (!c.dfa.live(q)) continue;
      for (int b = 0; b < 2; ++b) {
        const auto t = c.dfa.next(q, b);
        if (c.dfa.live(t)) built.add_rule(q, {Symbol::terminal(b ? '1' : '0'), Symbol::nonterminal(t)});
      }
      if (c.dfa.accepting(q)) built.add_rule(q, {});
    }
    built.set_start(c.dfa.initial());
    const auto r = cross_validate(built, in);
    CHECK(r.all_passed());
    for (const Word& w : dfa_words(c.dfa, 8)) CHECK(Membership(built).contains(w));
  }
}
