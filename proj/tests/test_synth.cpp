#include <doctest.h>

#include <functional>

#include "ordlex/automata.hpp"
#include "ordlex/error.hpp"
#include "ordlex/oracle.hpp"
#include "ordlex/scatter.hpp"
#include "ordlex/synth.hpp"
#include "support/brute.hpp"

using namespace ordlex;

namespace {

Ordinal o(const char* text) { return parse_ordinal(text); }

const char* const kSample[] = {
    "1", "3", "w", "w+2", "w*2", "w^2", "w^2*2+w+1", "w^5", "w^w", "w^w*2+3", "w^(w+1)", "w^(w*2)", "w^(w^2)",
};

void each_node(const Certificate& c, const std::function<void(const Certificate&)>& f) {
  f(c);
  if (c.left) each_node(*c.left, f);
  if (c.right) each_node(*c.right, f);
}

}  // namespace

TEST_CASE("synth_grammar examples") {
  auto s = synth_grammar(o("w"));
  CHECK(s.certificate->kind == Certificate::Kind::Omega);
  CHECK(to_text(s.grammar) == "S -> 1 S | 0\n");

  s = synth_grammar(o("w^w"));
  CHECK(s.certificate->kind == Certificate::Kind::OmegaIter);
  REQUIRE(s.certificate->left);
  CHECK(s.certificate->left->kind == Certificate::Kind::Omega);
  const auto reference = parse_grammar("S -> 1 S A | 0\nA -> 1 A | 0");
  CHECK(enumerate_words(s.grammar, 14).words == enumerate_words(reference, 14).words);

  s = synth_grammar(o("w+2"));
  CHECK(s.certificate->kind == Certificate::Kind::Sum);
  CHECK(s.certificate->left->kind == Certificate::Kind::Omega);
  CHECK(s.certificate->right->kind == Certificate::Kind::Fin);
  CHECK(s.certificate->right->n == 2);
  CHECK(is_right_linear(s.grammar));
  CHECK(regular_order_type(right_linear_to_dfa(s.grammar)) == o("w+2"));
}

TEST_CASE("synthesis rejects ordinals out of range") {
  CHECK_THROWS_AS(synth_grammar(Ordinal{}), PreconditionError);
  CHECK_THROWS_AS(synth_grammar(o("w^(w^w)")), PreconditionError);
  CHECK_THROWS_AS(synth_grammar(o("w^(w^w+1)")), PreconditionError);
  CHECK_NOTHROW(synth_grammar(o("w^(w^3*2+w)")));
  try {
    synth_certificate(o("w^(w^w)"));
    FAIL("expected an out-of-range error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("w^(w^w)") != std::string::npos);
  }
}

TEST_CASE("cert_enumerate examples") {
  CHECK(cert_enumerate(*cert_omega(), 3) == std::vector<Word>{"0", "10", "110"});
  CHECK(cert_enumerate(*cert_fin(3), 3) == std::vector<Word>{"0", "10", "110"});
  CHECK(cert_enumerate(*cert_fin(3), 10) == std::vector<Word>{"0", "10", "110"});
  CHECK(cert_enumerate(*cert_omega_iter(cert_omega()), 3) == std::vector<Word>{"0", "100", "1010"});
  CHECK_THROWS_AS(cert_enumerate(*cert_omega(), 100001), PreconditionError);
}

TEST_CASE("combinator preconditions") {
  CHECK_THROWS_AS(cert_fin(0), PreconditionError);
  CHECK_THROWS_AS(cert_omega_iter(cert_fin(2)), PreconditionError);
  CHECK_THROWS_AS(cert_omega_iter(cert_sum(cert_omega(), cert_fin(1))), PreconditionError);
  // w^2 iterated: w^(2*w) = w^w.
  CHECK(cert_omega_iter(cert_prod(cert_omega(), cert_omega()))->type == o("w^w"));
  CHECK(cert_omega_iter(cert_omega_iter(cert_omega()))->type == o("w^(w^2)"));
}

TEST_CASE("annotations follow ordinal arithmetic") {
  for (const char* text : kSample) {
    CAPTURE(text);
    const auto c = synth_certificate(o(text));
    CHECK(c->type == o(text));
    CHECK(certificate_consistent(*c));
    each_node(*c, [](const Certificate& n) {
      CHECK(n.prefix_code);
      switch (n.kind) {
        case Certificate::Kind::Fin: CHECK(n.type == Ordinal::finite(n.n)); break;
        case Certificate::Kind::Omega: CHECK(n.type == Ordinal::omega()); break;
        case Certificate::Kind::Sum: CHECK(n.type == n.left->type + n.right->type); break;
        // L(a) L(b) is a copy of L(b) for each word of L(a), in order.
        case Certificate::Kind::Prod: CHECK(n.type == n.right->type * n.left->type); break;
        case Certificate::Kind::OmegaIter:
          CHECK(n.type == omega_power(n.left->type.leading_exponent() * Ordinal::omega()));
          break;
      }
    });
  }
}

TEST_CASE("regular syntheses have the exact order type") {
  for (const char* text : kSample) {
    const Ordinal a = o(text);
    if (!(a < o("w^w"))) continue;
    CAPTURE(text);
    const auto s = synth_grammar(a);
    REQUIRE(is_right_linear(s.grammar));
    const Dfa d = right_linear_to_dfa(s.grammar);
    CHECK(regular_order_type(d) == a);
    const auto first = cert_enumerate(*s.certificate, 40);
    CHECK(first == dfa_lex_first(d, first.size()));
  }
}

TEST_CASE("certificate enumeration agrees with grammar enumeration") {
  for (const char* text : kSample) {
    CAPTURE(text);
    const auto s = synth_grammar(o(text));
    CHECK(cert_words_up_to(*s.certificate, 12) == enumerate_words(s.grammar, 12).words);
    const auto first = cert_enumerate(*s.certificate, 20);
    for (std::size_t i = 1; i < first.size(); ++i) CHECK(lex_less(first[i - 1], first[i]));
  }
}

TEST_CASE("synthesized languages are prefix codes") {
  for (const char* text : kSample) {
    CAPTURE(text);
    const auto words = brute::language(synth_grammar(o(text)).grammar, 10);
    for (const Word& u : words) {
      for (const Word& v : words) CHECK_FALSE(is_proper_prefix(u, v));
    }
  }
}

TEST_CASE("synthesized grammars are scattered") {
  for (const char* text : kSample) {
    CAPTURE(text);
    const auto s = synth_grammar(o(text));
    auto reduced = reduce_grammar(s.grammar);
    REQUIRE(reduced);
    auto g = to_gnf(*reduced);
    REQUIRE(g.grammar);
    CHECK(check_scattered_cfg(*g.grammar).scattered);
  }
}

TEST_CASE("certificate JSON round-trips") {
  for (const char* text : kSample) {
    const auto c = synth_certificate(o(text));
    const std::string json = certificate_to_json(*c);
    const auto back = certificate_from_json(json);
    CHECK(certificate_to_json(*back) == json);
    CHECK(back->type == c->type);
  }
  CHECK_THROWS_AS(certificate_from_json("{"), ParseError);
  CHECK_THROWS_AS(certificate_from_json(R"({"kind":"OMEGA","prefix_code":true,"type":"w+1"})"), PreconditionError);
  CHECK_THROWS_AS(certificate_from_json(R"({"kind":"CHAIN","prefix_code":true,"type":"w"})"), ParseError);
}

TEST_CASE("kind names") {
  CHECK(kind_name(Certificate::Kind::Fin) == "FIN");
  CHECK(kind_name(Certificate::Kind::OmegaIter) == "OMEGA_ITER");
}
