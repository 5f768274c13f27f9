#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ordlex/error.hpp"

namespace ordlex {

struct OrdinalTerm;

/// An ordinal below epsilon_0 in Cantor normal form.
///
/// The value is a finite sum w^e1*c1 + ... + w^ek*ck with e1 > ... > ek and
/// every ci >= 1. The empty sum is 0. Exponents are themselves ordinals, so
/// the representation is a finite tree; nesting deeper than kMaxDepth is
/// rejected. Term lists are immutable and shared between copies.
class Ordinal {
public:
  static constexpr int kMaxDepth = 32;

  Ordinal();
  Ordinal(const Ordinal&);
  Ordinal(Ordinal&&) noexcept;
  Ordinal& operator=(const Ordinal&);
  Ordinal& operator=(Ordinal&&) noexcept;
  ~Ordinal();

  static Ordinal finite(std::uint64_t n);
  static Ordinal omega();

  /// Builds from terms, checking the CNF invariants.
  static Ordinal from_terms(std::vector<OrdinalTerm> terms);

  std::span<const OrdinalTerm> terms() const;

  bool is_zero() const { return size_ == 0; }
  bool is_finite() const;
  bool is_successor() const;
  bool is_limit() const { return !is_zero() && !is_successor(); }

  /// Value of a finite ordinal; throws OrdinalError otherwise.
  std::uint64_t finite_value() const;

  /// Exponent of the leading term (0 for the zero ordinal).
  Ordinal leading_exponent() const;

  int depth() const;

private:
  friend Ordinal operator+(const Ordinal&, const Ordinal&);
  friend Ordinal operator*(const Ordinal&, const Ordinal&);
  friend bool operator==(const Ordinal&, const Ordinal&);

  // Uninitialized storage for n terms; arithmetic fills it directly because
  // it preserves the CNF invariants and never deepens the nesting.
  static std::shared_ptr<OrdinalTerm[]> allocate(std::size_t n);
  Ordinal(std::shared_ptr<const OrdinalTerm[]> terms, std::size_t size);

  std::shared_ptr<const OrdinalTerm[]> terms_;  // null for zero
  std::size_t size_ = 0;
};

struct OrdinalTerm {
  Ordinal exponent;
  std::uint64_t coefficient = 1;

  bool operator==(const OrdinalTerm&) const = default;
};

inline std::span<const OrdinalTerm> Ordinal::terms() const { return {terms_.get(), size_}; }

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
bool operator==(const Ordinal& a, const Ordinal& b);

/// Ordinary (non-commutative) ordinal sum.
Ordinal operator+(const Ordinal& a, const Ordinal& b);

/// Ordinal product; a * b is b copies of a laid end to end.
Ordinal operator*(const Ordinal& a, const Ordinal& b);

/// w^e.
Ordinal omega_power(const Ordinal& exponent);

Ordinal ord_max(const Ordinal& a, const Ordinal& b);
Ordinal successor(const Ordinal& a);

/// Parses the ASCII syntax, e.g. "w^(w*2+1)*3+w*2+5". Throws ParseError.
Ordinal parse_ordinal(std::string_view text);

std::string to_string(const Ordinal& a);

}  // namespace ordlex
