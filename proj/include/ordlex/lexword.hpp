#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ordlex {

/// A finite word; each char is one letter.
using Word = std::string;

/// Letters in ascending order. Non-empty, no duplicates.
class OrderedAlphabet {
public:
  explicit OrderedAlphabet(std::string letters);

  /// The default alphabet 0 < 1.
  static OrderedAlphabet binary();

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool contains(char c) const { return rank(c).has_value(); }
  std::optional<std::size_t> rank(char c) const;
  bool is_binary() const { return letters_ == "01"; }

  bool operator==(const OrderedAlphabet&) const = default;

private:
  std::string letters_;
};

enum class LexReason { Prefix, Strict, Equal };

struct LexComparison {
  std::strong_ordering order = std::strong_ordering::equal;
  LexReason reason = LexReason::Equal;
};

/// <lex = <pr union <s. Throws PreconditionError on a letter outside `alphabet`.
LexComparison lex_compare(std::string_view u, std::string_view v,
                          const OrderedAlphabet& alphabet = OrderedAlphabet::binary());

inline bool lex_less(std::string_view u, std::string_view v,
                     const OrderedAlphabet& alphabet = OrderedAlphabet::binary()) {
  return lex_compare(u, v, alphabet).order < 0;
}

/// u <s v: the words differ at some position and u has the smaller letter there.
bool strictly_less(std::string_view u, std::string_view v,
                   const OrderedAlphabet& alphabet = OrderedAlphabet::binary());

bool is_proper_prefix(std::string_view u, std::string_view v);

struct PrimitiveRoot {
  Word root;
  std::size_t power = 1;
};

/// w = root^power with root primitive. Throws PreconditionError on the empty word.
PrimitiveRoot primitive_root(std::string_view w);

bool is_primitive(std::string_view w);

/// The rotation starting at index k.
Word rotate(std::string_view w, std::size_t k);

/// w in v0* v1.
bool in_power_prefix(std::string_view v0, std::string_view v1, std::string_view w);

struct ConjugatePair {
  Word v0;
  Word v1;

  bool operator==(const ConjugatePair&) const = default;
};

/// Finds a rotation v0 of u0 and a proper prefix v1 of v0 with w in v0* v1.
/// Rotations are tried by index, then prefixes by length, so the answer is
/// deterministic. Throws PreconditionError if u0 is empty or not primitive.
std::optional<ConjugatePair> conjugate_align(std::string_view u0, std::string_view w);

/// An order-preserving letter-to-block code over {0,1} with equal-length
/// codewords, so the induced word map preserves <lex.
class BinaryEncoding {
public:
  explicit BinaryEncoding(const OrderedAlphabet& alphabet);

  std::size_t width() const { return width_; }
  const std::string& codeword(char letter) const;
  const std::vector<std::string>& codewords() const { return codewords_; }
  Word encode(std::string_view word) const;

private:
  OrderedAlphabet alphabet_;
  std::size_t width_ = 1;
  std::vector<std::string> codewords_;
};

BinaryEncoding binary_encode(const OrderedAlphabet& alphabet);

}  // namespace ordlex
