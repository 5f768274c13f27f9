#include <doctest.h>

#include <random>

#include "ordlex/error.hpp"
#include "ordlex/lexword.hpp"
#include "support/brute.hpp"

using namespace ordlex;

namespace {

// Primitive root by trying every period that divides the length.
PrimitiveRoot brute_root(const Word& w) {
  for (std::size_t p = 1; p <= w.size(); ++p) {
    if (w.size() % p) continue;
    bool ok = true;
    for (std::size_t i = p; i < w.size() && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return {w.substr(0, p), w.size() / p};
  }
  return {w, 1};
}

// Every (rotation, proper prefix) pair that reconstructs w.
std::vector<ConjugatePair> brute_alignments(const Word& u0, const Word& w) {
  std::vector<ConjugatePair> out;
  for (std::size_t k = 0; k < u0.size(); ++k) {
    const Word v0 = u0.substr(k) + u0.substr(0, k);
    for (std::size_t l = 0; l < v0.size(); ++l) {
      const Word v1 = v0.substr(0, l);
      for (Word built; built.size() <= w.size(); built += v0) {
        if (built + v1 == w) {
          out.push_back({v0, v1});
          break;
        }
      }
    }
  }
  return out;
}

int sign(std::strong_ordering o) { return o < 0 ? -1 : o > 0 ? 1 : 0; }

}  // namespace

TEST_CASE("lex_compare examples") {
  auto c = lex_compare("0", "01");
  CHECK(c.order < 0);
  CHECK(c.reason == LexReason::Prefix);
  c = lex_compare("001", "01");
  CHECK(c.order < 0);
  CHECK(c.reason == LexReason::Strict);
  c = lex_compare("", "");
  CHECK(c.order == 0);
  CHECK(c.reason == LexReason::Equal);
  c = lex_compare("1", "01");
  CHECK(c.order > 0);
  CHECK(c.reason == LexReason::Strict);
}

TEST_CASE("lex_compare uses the declared letter order") {
  const OrderedAlphabet zyx("zyx");
  CHECK(lex_less("z", "x", zyx));
  CHECK(lex_less("zz", "y", zyx));
  CHECK_THROWS_AS(lex_compare("a", "z", zyx), PreconditionError);
}

TEST_CASE("alphabet invariants") {
  CHECK_THROWS_AS(OrderedAlphabet(""), PreconditionError);
  CHECK_THROWS_AS(OrderedAlphabet("aba"), PreconditionError);
  CHECK(OrderedAlphabet::binary().is_binary());
  CHECK(OrderedAlphabet("abc").rank('c') == 2u);
}

TEST_CASE("lex order is total, transitive, and contains the prefix order") {
  const auto words = brute::all_words("01", 4);
  for (const Word& u : words) {
    for (const Word& v : words) {
      const auto uv = lex_compare(u, v).order;
      CHECK(sign(uv) == -sign(lex_compare(v, u).order));
      CHECK((uv == 0) == (u == v));
      if (is_proper_prefix(u, v)) CHECK(uv < 0);
      CHECK(strictly_less(u, v) == (uv < 0 && !is_proper_prefix(u, v)));
    }
  }
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  for (int i = 0; i < 5000; ++i) {
    const Word& a = words[pick(rng)];
    const Word& b = words[pick(rng)];
    const Word& c = words[pick(rng)];
    if (lex_less(a, b) && lex_less(b, c)) CHECK(lex_less(a, c));
  }
}

TEST_CASE("primitive_root examples") {
  CHECK(primitive_root("0101").root == "01");
  CHECK(primitive_root("0101").power == 2);
  CHECK(primitive_root("000").root == "0");
  CHECK(primitive_root("000").power == 3);
  CHECK(primitive_root("0110").root == "0110");
  CHECK(primitive_root("0110").power == 1);
  CHECK_THROWS_AS(primitive_root(""), PreconditionError);
}

TEST_CASE("primitive_root matches the divisor-period search") {
  for (const Word& w : brute::all_words("01", 10)) {
    if (w.empty()) continue;
    const auto got = primitive_root(w);
    const auto want = brute_root(w);
    CHECK(got.root == want.root);
    CHECK(got.power == want.power);
    CHECK(primitive_root(got.root).power == 1);
    CHECK(is_primitive(w) == (want.power == 1));
  }
}

TEST_CASE("conjugate_align examples") {
  auto a = conjugate_align("01", "1010101");
  REQUIRE(a);
  CHECK(a->v0 == "10");
  CHECK(a->v1 == "1");
  a = conjugate_align("01", "");
  REQUIRE(a);
  CHECK(a->v0 == "01");
  CHECK(a->v1 == "");
  CHECK_FALSE(conjugate_align("01", "11"));
  CHECK_THROWS_AS(conjugate_align("0101", "0"), PreconditionError);
  CHECK_THROWS_AS(conjugate_align("", "0"), PreconditionError);
}

TEST_CASE("conjugate_align is sound and complete against exhaustive search") {
  for (const Word& u0 : brute::all_words("01", 4)) {
    if (u0.empty() || !is_primitive(u0)) continue;
    for (const Word& w : brute::all_words("01", 8)) {
      const auto got = conjugate_align(u0, w);
      const auto all = brute_alignments(u0, w);
      CHECK(got.has_value() == !all.empty());
      if (!got) continue;
      CHECK(got->v0 == all.front().v0);
      CHECK(got->v1 == all.front().v1);
      CHECK(in_power_prefix(got->v0, got->v1, w));
    }
  }
}

TEST_CASE("rotate") {
  CHECK(rotate("0011", 1) == "0110");
  CHECK(rotate("0011", 0) == "0011");
}

TEST_CASE("binary_encode examples") {
  const auto id = binary_encode(OrderedAlphabet::binary());
  CHECK(id.width() == 1);
  CHECK(id.codeword('0') == "0");
  CHECK(id.codeword('1') == "1");
  const auto abc = binary_encode(OrderedAlphabet("abc"));
  CHECK(abc.codewords() == std::vector<std::string>{"00", "01", "10"});
  const auto abcd = binary_encode(OrderedAlphabet("abcd"));
  CHECK(abcd.codewords() == std::vector<std::string>{"00", "01", "10", "11"});
  CHECK(abcd.encode("da") == "1100");
  CHECK(binary_encode(OrderedAlphabet("x")).codewords() == std::vector<std::string>{"0"});
}

TEST_CASE("binary_encode preserves the lex order") {
  for (const std::string letters : {"abc", "abcd", "pqrst"}) {
    const auto enc = binary_encode(OrderedAlphabet(letters));
    const OrderedAlphabet a(letters);
    const auto words = brute::all_words(letters, letters.size() > 4 ? 3 : 4);
    for (const Word& u : words) {
      for (const Word& v : words) {
        CHECK(sign(lex_compare(u, v, a).order) == sign(lex_compare(enc.encode(u), enc.encode(v)).order));
      }
    }
  }
}
