#include "ordlex/lexword.hpp"

#include <algorithm>

#include "ordlex/error.hpp"

namespace ordlex {

OrderedAlphabet::OrderedAlphabet(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw PreconditionError("alphabet must be non-empty");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_.find(letters_[i], i + 1) != std::string::npos) {
      throw PreconditionError(std::string("duplicate letter '") + letters_[i] + "' in alphabet");
    }
  }
}

OrderedAlphabet OrderedAlphabet::binary() { return OrderedAlphabet("01"); }

std::optional<std::size_t> OrderedAlphabet::rank(char c) const {
  auto pos = letters_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

namespace {

std::size_t letter_rank(const OrderedAlphabet& alphabet, char c) {
  auto r = alphabet.rank(c);
  if (!r) throw PreconditionError(std::string("letter '") + c + "' is not in the alphabet");
  return *r;
}

}  // namespace

LexComparison lex_compare(std::string_view u, std::string_view v, const OrderedAlphabet& alphabet) {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto a = letter_rank(alphabet, u[i]);
    auto b = letter_rank(alphabet, v[i]);
    if (a != b) return {a <=> b, LexReason::Strict};
  }
  for (char c : u.substr(n)) letter_rank(alphabet, c);
  for (char c : v.substr(n)) letter_rank(alphabet, c);
  if (u.size() == v.size()) return {std::strong_ordering::equal, LexReason::Equal};
  return {u.size() <=> v.size(), LexReason::Prefix};
}

bool strictly_less(std::string_view u, std::string_view v, const OrderedAlphabet& alphabet) {
  auto c = lex_compare(u, v, alphabet);
  return c.order < 0 && c.reason == LexReason::Strict;
}

bool is_proper_prefix(std::string_view u, std::string_view v) {
  return u.size() < v.size() && v.substr(0, u.size()) == u;
}

PrimitiveRoot primitive_root(std::string_view w) {
  if (w.empty()) throw PreconditionError("primitive root of the empty word");
  const std::size_t n = w.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = w[i] == w[i - p];
    if (periodic) return {Word(w.substr(0, p)), n / p};
  }
  return {Word(w), 1};
}

bool is_primitive(std::string_view w) { return !w.empty() && primitive_root(w).power == 1; }

Word rotate(std::string_view w, std::size_t k) {
  if (w.empty()) return {};
  k %= w.size();
  return Word(w.substr(k)) + Word(w.substr(0, k));
}

bool in_power_prefix(std::string_view v0, std::string_view v1, std::string_view w) {
  if (v0.empty()) return w == v1;
  if (w.size() % v0.size() != v1.size() % v0.size() || w.size() < v1.size()) return false;
  const std::size_t k = (w.size() - v1.size()) / v0.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (w.substr(i * v0.size(), v0.size()) != v0) return false;
  }
  return w.substr(k * v0.size()) == v1;
}

std::optional<ConjugatePair> conjugate_align(std::string_view u0, std::string_view w) {
  if (!is_primitive(u0)) throw PreconditionError("conjugate_align needs a non-empty primitive word");
  for (std::size_t r = 0; r < u0.size(); ++r) {
    Word v0 = rotate(u0, r);
    for (std::size_t len = 0; len < v0.size(); ++len) {
      std::string_view v1 = std::string_view(v0).substr(0, len);
      if (in_power_prefix(v0, v1, w)) return ConjugatePair{v0, Word(v1)};
    }
  }
  return std::nullopt;
}

BinaryEncoding::BinaryEncoding(const OrderedAlphabet& alphabet) : alphabet_(alphabet) {
  while ((std::size_t{1} << width_) < alphabet.size()) ++width_;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    std::string code(width_, '0');
    for (std::size_t b = 0; b < width_; ++b) {
      if ((i >> (width_ - 1 - b)) & 1U) code[b] = '1';
    }
    codewords_.push_back(std::move(code));
  }
}

const std::string& BinaryEncoding::codeword(char letter) const {
  return codewords_[letter_rank(alphabet_, letter)];
}

Word BinaryEncoding::encode(std::string_view word) const {
  Word out;
  out.reserve(word.size() * width_);
  for (char c : word) out += codeword(c);
  return out;
}

BinaryEncoding binary_encode(const OrderedAlphabet& alphabet) { return BinaryEncoding(alphabet); }

}  // namespace ordlex
