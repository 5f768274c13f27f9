#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ordlex/grammar.hpp"
#include "ordlex/lexword.hpp"
#include "ordlex/ordinal.hpp"

namespace ordlex {

struct Certificate;
using CertPtr = std::shared_ptr<const Certificate>;

/// How a language over {0,1} was assembled, with the order type of every node.
///   Fin(n)        {1^i 0 : i < n}
///   Omega         1* 0
///   Sum(a, b)     0 L(a) + 1 L(b)
///   Prod(a, b)    L(a) L(b)
///   OmegaIter(a)  union over n of 1^n 0 L(a)^n
/// Every node denotes a prefix code.
struct Certificate {
  enum class Kind { Fin, Omega, Sum, Prod, OmegaIter };

  Kind kind = Kind::Fin;
  std::uint64_t n = 0;  // Fin only
  CertPtr left;
  CertPtr right;  // Sum and Prod only
  Ordinal type;
  bool prefix_code = true;
};

CertPtr cert_fin(std::uint64_t n);
CertPtr cert_omega();
CertPtr cert_sum(CertPtr a, CertPtr b);
CertPtr cert_prod(CertPtr a, CertPtr b);
/// Needs an operand of type w^g with g >= 1; the result has type w^(g*w).
CertPtr cert_omega_iter(CertPtr a);

std::string kind_name(Certificate::Kind k);

/// The certificate tree for alpha: each CNF term w^b*c is Prod(Fin(c), P(b))
/// where P builds w^b from Omega, Prod, and OmegaIter following b's own CNF;
/// terms are joined largest first by nested Sum. Throws PreconditionError for
/// alpha = 0 or alpha >= w^(w^w).
CertPtr synth_certificate(const Ordinal& alpha);

/// A grammar for L(c) over 0 < 1. Start symbol S, others N1, N2, ... The
/// grammar is right-linear unless the tree contains OmegaIter.
Grammar certificate_grammar(const Certificate& c);

struct Synthesis {
  Grammar grammar;
  CertPtr certificate;
};

Synthesis synth_grammar(const Ordinal& alpha);

/// The first n words of L(c) in <lex order (fewer when L(c) is smaller),
/// generated from the tree alone. Throws PreconditionError for n > 10^5.
std::vector<Word> cert_enumerate(const Certificate& c, std::size_t n);

/// All words of L(c) with length <= max_length, in <lex order.
std::vector<Word> cert_words_up_to(const Certificate& c, std::size_t max_length);

/// Recomputes every annotation bottom-up; false on any mismatch.
bool certificate_consistent(const Certificate& c);

std::string certificate_to_json(const Certificate& c);
/// Throws ParseError on malformed JSON and PreconditionError on bad annotations.
CertPtr certificate_from_json(std::string_view text);

}  // namespace ordlex
