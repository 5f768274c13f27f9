#pragma once

// Shared fixtures: a 12-language regular suite with hand-derived order
// models, and 20 right-linear grammars that are scattered or dense by
// construction.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordlex/automata.hpp"
#include "ordlex/grammar.hpp"
#include "ordlex/ordinal.hpp"
#include "ordlex/symorder.hpp"

namespace suites {

using ordlex::Dfa;
using ordlex::Ordinal;
using ordlex::OrderPtr;
using ordlex::Word;

inline Dfa dfa_of(const std::string& grammar_text) {
  return ordlex::right_linear_to_dfa(ordlex::parse_grammar(grammar_text));
}

inline Word repeat(const Word& w, std::size_t n) {
  Word out;
  for (std::size_t i = 0; i < n; ++i) out += w;
  return out;
}

struct RegularCase {
  std::string name;
  Dfa dfa;
  OrderPtr model;                        // hand-derived order of (L, <lex)
  Ordinal rank;
  std::optional<Ordinal> order_type;     // set iff well-ordered
  std::function<Word(std::size_t)> nth;  // i-th word in <lex, for well-orders
  std::size_t size = 0;                  // number of words when finite, else 0
};

inline OrderPtr omega_power_order(std::size_t k) {
  OrderPtr e = ordlex::fin(1);
  for (std::size_t i = 0; i < k; ++i) e = ordlex::zsum(ordlex::fin(0), {}, e);
  return e;
}

inline std::string ones_zero_power(std::size_t k) {
  // (1*0)^k with nonterminals A0 .. A(k-1).
  std::string text;
  for (std::size_t i = 0; i < k; ++i) {
    const std::string self = "A" + std::to_string(i);
    text += self + " -> 1 " + self + " | 0" + (i + 1 < k ? " A" + std::to_string(i + 1) : "") + "\n";
  }
  return text;
}

inline std::vector<RegularCase> regular_suite() {
  using ordlex::fin;
  using ordlex::sum;
  using ordlex::zsum;
  const Ordinal w = Ordinal::omega();
  std::vector<RegularCase> out;
  auto finite = [&](std::string name, std::vector<Word> words) {
    RegularCase c{std::move(name), Dfa::from_words(words), fin(words.size()), Ordinal{},
                  Ordinal::finite(words.size()), nullptr, words.size()};
    c.nth = [words](std::size_t i) { return words.at(i); };
    out.push_back(std::move(c));
  };
  finite("{01}", {"01"});
  finite("{0,10,110}", {"0", "10", "110"});
  finite("{eps,0}", {"", "0"});
  out.push_back({"0*", dfa_of("S -> 0 S | _eps"), ordlex::omega_order(), Ordinal::finite(1), w,
                 [](std::size_t i) { return repeat("0", i); }});
  out.push_back({"1*0", dfa_of("S -> 1 S | 0"), ordlex::omega_order(), Ordinal::finite(1), w,
                 [](std::size_t i) { return repeat("1", i) + "0"; }});
  for (std::size_t k = 2; k <= 4; ++k) {
    out.push_back({"(1*0)^" + std::to_string(k), dfa_of(ones_zero_power(k)), omega_power_order(k),
                   Ordinal::finite(k), ordlex::omega_power(Ordinal::finite(k)),
                   [k](std::size_t i) { return repeat("0", k - 1) + repeat("1", i) + "0"; }});
  }
  out.push_back({"0* + 10*", dfa_of("S -> 0 A | 1 A | _eps\nA -> 0 A | _eps"),
                 sum({ordlex::omega_order(), ordlex::omega_order()}), Ordinal::finite(1), w * Ordinal::finite(2),
                 [](std::size_t i) { return repeat("0", i); }});
  out.push_back({"0*1", dfa_of("S -> 0 S | 1"), ordlex::omega_star_order(), Ordinal::finite(1), std::nullopt,
                 nullptr});
  // 1 < (... < 001 < 01) < 1 < 10 < 110 < ...: a point, then w*, then w.
  out.push_back({"0*1 + 1*0", unite(dfa_of("S -> 0 S | 1"), dfa_of("S -> 1 S | 0")),
                 sum({fin(1), ordlex::omega_star_order(), ordlex::omega_order()}), Ordinal::finite(1), std::nullopt,
                 nullptr});
  // 0^a precede every longer block; the blocks 0^a 1+ are w-chains in
  // descending order of a: w + w*w*.
  out.push_back({"0*1*", dfa_of("S -> 0 S | A\nA -> 1 A | _eps"),
                 sum({ordlex::omega_order(), zsum(ordlex::omega_order(), {}, fin(0))}), Ordinal::finite(2),
                 std::nullopt, nullptr});
  return out;
}

struct RightLinearCase {
  std::string text;
  bool scattered;
};

inline std::vector<RightLinearCase> right_linear_suite() {
  return {
      {"S -> 1 S | 0", true},
      {"S -> 0 S | 0", true},
      {"S -> 1 S | 0 A\nA -> 1 A | 0", true},
      {"S -> 0 S | 1", true},
      {"S -> 0 S | 1 A | _eps\nA -> 1 A | _eps", true},
      {"S -> 0 1 S | 0", true},
      {"S -> 0 1 | 1 0 | 1 1 0", true},
      {"S -> 0 S | 1 A\nA -> 0 A | 1", true},
      {"S -> 1 1 S | 0 | 1 0", true},
      {"S -> 0 0 1 S | 1", true},
      {"S -> 0 S | 1 S | 0", false},
      {"S -> 0 0 S | 1 S | 0", false},
      {"S -> 0 S | 1 1 S | 1", false},
      {"S -> 0 1 S | 1 0 S | 0", false},
      {"S -> 0 S | 1 0 S | 1", false},
      {"S -> 0 A | 1 S | 0\nA -> 0 S | 1 A | 1", false},
      {"S -> 1 S | 0 A\nA -> 0 A | 1 A | 0", false},
      {"S -> 0 0 S | 0 1 S | 1", false},
      {"S -> 0 S | 1 A\nA -> 0 S | 1 A | 0", false},
      {"S -> 0 1 1 S | 0 1 0 S | 0", false},
  };
}

}  // namespace suites
