#include "ordlex/ordinal.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

namespace ordlex {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OrdinalError("ordinal coefficient overflow");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OrdinalError("ordinal coefficient overflow");
  return r;
}

// Value of a finite ordinal without the checked accessor's error path.
bool as_finite(const Ordinal& a, std::uint64_t& v) {
  const auto t = a.terms();
  if (t.empty()) {
    v = 0;
    return true;
  }
  if (t.size() != 1 || !t[0].exponent.is_zero()) return false;
  v = t[0].coefficient;
  return true;
}

void check_depth(const Ordinal& a) {
  if (a.depth() > Ordinal::kMaxDepth) {
    throw OrdinalError("ordinal nesting depth exceeds " + std::to_string(Ordinal::kMaxDepth));
  }
}

}  // namespace

Ordinal::Ordinal() = default;
Ordinal::Ordinal(const Ordinal&) = default;
Ordinal::Ordinal(Ordinal&&) noexcept = default;
Ordinal& Ordinal::operator=(const Ordinal&) = default;
Ordinal& Ordinal::operator=(Ordinal&&) noexcept = default;
Ordinal::~Ordinal() = default;

namespace {

template <std::size_t N>
std::shared_ptr<OrdinalTerm[]> block() {
  auto p = std::make_shared<std::array<OrdinalTerm, N>>();
  return std::shared_ptr<OrdinalTerm[]>(p, p->data());
}

}  // namespace

// One allocation for the usual small term counts.
std::shared_ptr<OrdinalTerm[]> Ordinal::allocate(std::size_t n) {
  switch (n) {
    case 1: return block<1>();
    case 2: return block<2>();
    case 3: return block<3>();
    case 4: return block<4>();
    case 5: return block<5>();
    case 6: return block<6>();
    case 7: return block<7>();
    case 8: return block<8>();
    default: return std::shared_ptr<OrdinalTerm[]>(new OrdinalTerm[n]);
  }
}

Ordinal::Ordinal(std::shared_ptr<const OrdinalTerm[]> terms, std::size_t size)
    : terms_(size ? std::move(terms) : nullptr), size_(size) {}

Ordinal Ordinal::finite(std::uint64_t n) {
  // Small naturals live in immortal storage behind owner-less pointers, so
  // copying them (mostly as exponents) never touches a reference count.
  static const Ordinal* const kSmall = [] {
    auto* t = new OrdinalTerm[256];
    auto* v = new Ordinal[256];
    for (std::uint64_t k = 1; k < 256; ++k) {
      t[k].coefficient = k;
      v[k] = Ordinal(std::shared_ptr<const OrdinalTerm[]>(std::shared_ptr<void>(), t + k), 1);
    }
    return v;
  }();
  if (n < 256) return kSmall[n];
  auto t = allocate(1);
  t[0].coefficient = n;
  return Ordinal(std::move(t), 1);
}

Ordinal Ordinal::omega() { return omega_power(finite(1)); }

Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) throw OrdinalError("ordinal coefficient must be positive");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) {
      throw OrdinalError("ordinal exponents must be strictly decreasing");
    }
  }
  auto t = allocate(terms.size());
  std::move(terms.begin(), terms.end(), t.get());
  Ordinal r(std::move(t), terms.size());
  check_depth(r);
  return r;
}

bool Ordinal::is_finite() const {
  return size_ == 0 || (size_ == 1 && terms_[0].exponent.is_zero());
}

bool Ordinal::is_successor() const {
  return size_ > 0 && terms_[size_ - 1].exponent.is_zero();
}

std::uint64_t Ordinal::finite_value() const {
  if (!is_finite()) throw OrdinalError("ordinal " + to_string(*this) + " is not finite");
  return size_ ? terms_[0].coefficient : 0;
}

Ordinal Ordinal::leading_exponent() const {
  return size_ ? terms_[0].exponent : Ordinal{};
}

int Ordinal::depth() const {
  int d = 0;
  for (const auto& t : terms()) d = std::max(d, t.exponent.depth());
  return size_ ? d + 1 : 0;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const auto x = a.terms();
  const auto y = b.terms();
  if (x.data() == y.data()) return x.size() <=> y.size();
  std::uint64_t u, v;
  if (as_finite(a, u) && as_finite(b, v)) return u <=> v;
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = x[i].exponent <=> y[i].exponent; c != 0) return c;
    if (auto c = x[i].coefficient <=> y[i].coefficient; c != 0) return c;
  }
  return x.size() <=> y.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  return a.size_ == b.size_ && (a.terms_ == b.terms_ || std::ranges::equal(a.terms(), b.terms()));
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  std::uint64_t u, v;
  if (as_finite(a, u) && as_finite(b, v)) return Ordinal::finite(checked_add(u, v));
  const auto x = a.terms();
  const auto y = b.terms();
  const Ordinal& lead = y.front().exponent;
  // Terms of a below b's leading exponent are absorbed.
  std::size_t keep = 0;
  std::strong_ordering c = std::strong_ordering::less;
  while (keep < x.size() && (c = x[keep].exponent <=> lead) > 0) ++keep;
  if (keep == 0 && c < 0) return b;
  auto out = Ordinal::allocate(keep + y.size());
  std::copy(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(keep), out.get());
  std::copy(y.begin(), y.end(), out.get() + keep);
  if (keep < x.size() && c == 0) out[keep].coefficient = checked_add(x[keep].coefficient, y.front().coefficient);
  return Ordinal(std::move(out), keep + y.size());
}

Ordinal operator*(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal{};
  // a * w^e = w^(lead(a) + e) for e > 0, and a * n scales only the leading
  // coefficient; the exponents produced this way are already decreasing.
  const auto x = a.terms();
  const auto y = b.terms();
  const OrdinalTerm& head = x.front();
  const bool finite_tail = b.is_successor();
  const std::size_t size = y.size() + (finite_tail ? x.size() - 1 : 0);
  auto out = Ordinal::allocate(size);
  std::size_t k = 0;
  for (const auto& t : y) {
    if (t.exponent.is_zero()) {
      out[k++] = {head.exponent, checked_mul(head.coefficient, t.coefficient)};
      for (std::size_t i = 1; i < x.size(); ++i) out[k++] = x[i];
    } else {
      std::uint64_t u, v;
      if (as_finite(head.exponent, u) && as_finite(t.exponent, v)) {
        out[k++] = {Ordinal::finite(checked_add(u, v)), t.coefficient};
      } else {
        out[k++] = {head.exponent + t.exponent, t.coefficient};
      }
    }
  }
  return Ordinal(std::move(out), size);
}

Ordinal omega_power(const Ordinal& exponent) {
  return Ordinal::from_terms({OrdinalTerm{exponent, 1}});
}

Ordinal ord_max(const Ordinal& a, const Ordinal& b) { return a < b ? b : a; }

Ordinal successor(const Ordinal& a) { return a + Ordinal::finite(1); }

namespace {

class OrdinalParser {
public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal r = expr(0);
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

private:
  Ordinal expr(int depth) {
    if (depth > Ordinal::kMaxDepth) fail("ordinal nesting too deep");
    std::vector<OrdinalTerm> terms;
    std::size_t term_start = 0;
    do {
      skip_space();
      term_start = pos_;
      OrdinalTerm t = term(depth);
      if (t.coefficient == 0) {
        // A bare "0" is only meaningful as the whole expression.
        if (!terms.empty() || peek_plus()) fail_at("zero term inside a sum", term_start);
        skip_space();
        return Ordinal{};
      }
      if (!terms.empty() && !(t.exponent < terms.back().exponent)) {
        fail_at("exponents must be strictly decreasing", term_start);
      }
      terms.push_back(std::move(t));
      skip_space();
    } while (accept('+'));
    return Ordinal::from_terms(std::move(terms));
  }

  OrdinalTerm term(int depth) {
    skip_space();
    if (accept('w')) {
      Ordinal exponent = Ordinal::finite(1);
      skip_space();
      if (accept('^')) exponent = atom(depth);
      skip_space();
      std::uint64_t coefficient = 1;
      if (accept('*')) {
        skip_space();
        coefficient = number();
        if (coefficient == 0) fail("coefficient must be positive");
      }
      return {exponent, coefficient};
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      return {Ordinal{}, number()};
    }
    fail("expected 'w' or a natural number");
  }

  Ordinal atom(int depth) {
    skip_space();
    if (accept('(')) {
      Ordinal e = expr(depth + 1);
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (accept('w')) return Ordinal::omega();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      return Ordinal::finite(number());
    }
    fail("expected exponent");
  }

  std::uint64_t number() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected natural number");
    }
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = checked_add(checked_mul(v, 10), static_cast<std::uint64_t>(text_[pos_] - '0'));
      ++pos_;
    }
    return v;
  }

  bool peek_plus() {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == '+';
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) { fail_at(msg, pos_); }

  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) {
    throw ParseError("ordinal syntax error at position " + std::to_string(at) + ": " + msg, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
  try {
    return OrdinalParser(text).parse();
  } catch (const ParseError&) {
    throw;
  } catch (const OrdinalError& e) {
    throw ParseError(std::string("ordinal syntax error: ") + e.what(), 0);
  }
}

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += '+';
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (t.exponent.is_finite()) {
      if (t.exponent.finite_value() != 1) out += '^' + std::to_string(t.exponent.finite_value());
    } else if (t.exponent == Ordinal::omega()) {
      out += "^w";
    } else {
      out += "^(" + to_string(t.exponent) + ')';
    }
    if (t.coefficient != 1) out += '*' + std::to_string(t.coefficient);
  }
  return out;
}

}  // namespace ordlex
