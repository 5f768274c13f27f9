#include "ordlex/symorder.hpp"

#include <algorithm>
#include <cctype>

#include "ordlex/error.hpp"

namespace ordlex {

OrderPtr fin(std::uint64_t n) { return std::make_shared<const OrderExpr>(OrderExpr{OrderExpr::Fin{n}}); }

OrderPtr sum(std::vector<OrderPtr> parts) {
  if (parts.empty()) throw PreconditionError("sum needs at least one part");
  return std::make_shared<const OrderExpr>(OrderExpr{OrderExpr::Sum{std::move(parts)}});
}

OrderPtr zsum(OrderPtr left, std::vector<OrderPtr> middle, OrderPtr right) {
  return std::make_shared<const OrderExpr>(
      OrderExpr{OrderExpr::ZSum{std::move(left), std::move(middle), std::move(right)}});
}

OrderPtr omega_order() { return zsum(fin(0), {}, fin(1)); }
OrderPtr omega_star_order() { return zsum(fin(1), {}, fin(0)); }
OrderPtr zeta_order() { return zsum(fin(1), {}, fin(1)); }

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

bool expr_is_empty(const OrderExpr& e) {
  return std::visit(Overloaded{
                        [](const OrderExpr::Fin& f) { return f.n == 0; },
                        [](const OrderExpr::Sum& s) {
                          return std::all_of(s.parts.begin(), s.parts.end(),
                                             [](const OrderPtr& p) { return expr_is_empty(*p); });
                        },
                        [](const OrderExpr::ZSum& z) {
                          return expr_is_empty(*z.left) && expr_is_empty(*z.right) &&
                                 std::all_of(z.middle.begin(), z.middle.end(),
                                             [](const OrderPtr& p) { return expr_is_empty(*p); });
                        },
                    },
                    e.node);
}

bool expr_is_finite(const OrderExpr& e) {
  return std::visit(Overloaded{
                        [](const OrderExpr::Fin&) { return true; },
                        [](const OrderExpr::Sum& s) {
                          return std::all_of(s.parts.begin(), s.parts.end(),
                                             [](const OrderPtr& p) { return expr_is_finite(*p); });
                        },
                        [](const OrderExpr::ZSum& z) {
                          return expr_is_empty(*z.left) && expr_is_empty(*z.right) &&
                                 std::all_of(z.middle.begin(), z.middle.end(),
                                             [](const OrderPtr& p) { return expr_is_finite(*p); });
                        },
                    },
                    e.node);
}

Ordinal expr_rank(const OrderExpr& e) {
  return std::visit(Overloaded{
                        [](const OrderExpr::Fin&) { return Ordinal{}; },
                        [](const OrderExpr::Sum& s) {
                          Ordinal r;
                          for (const auto& p : s.parts) r = ord_max(r, expr_rank(*p));
                          return r;
                        },
                        [](const OrderExpr::ZSum& z) {
                          Ordinal r;
                          for (const auto& p : z.middle) r = ord_max(r, expr_rank(*p));
                          for (const auto* tail : {&z.left, &z.right}) {
                            if (!expr_is_empty(**tail)) r = ord_max(r, successor(expr_rank(**tail)));
                          }
                          return r;
                        },
                    },
                    e.node);
}

namespace {

void collect(const OrderExpr& e, std::size_t budget, OrderLabel& prefix, std::vector<OrderLabel>& out) {
  auto take_block = [&](const OrderExpr& block, std::int64_t index) {
    const std::size_t before = out.size();
    if (before >= budget) return false;
    prefix.push_back(index);
    collect(block, budget, prefix, out);
    prefix.pop_back();
    return out.size() > before;
  };
  std::visit(Overloaded{
                 [&](const OrderExpr::Fin& f) {
                   for (std::uint64_t i = 0; i < f.n && out.size() < budget; ++i) {
                     prefix.push_back(static_cast<std::int64_t>(i));
                     out.push_back(prefix);
                     prefix.pop_back();
                   }
                 },
                 [&](const OrderExpr::Sum& s) {
                   for (std::size_t i = 0; i < s.parts.size(); ++i) {
                     take_block(*s.parts[i], static_cast<std::int64_t>(i));
                   }
                 },
                 [&](const OrderExpr::ZSum& z) {
                   const auto m = static_cast<std::int64_t>(z.middle.size());
                   for (std::int64_t j = 0; j < m; ++j) take_block(*z.middle[j], j);
                   const bool left = !expr_is_empty(*z.left), right = !expr_is_empty(*z.right);
                   for (std::int64_t k = 1; out.size() < budget && (left || right); ++k) {
                     if (right) take_block(*z.right, m - 1 + k);
                     if (left) take_block(*z.left, -k);
                   }
                 },
             },
             e.node);
}

}  // namespace

std::vector<OrderLabel> expr_truncate(const OrderExpr& e, std::size_t n) {
  if (n > 10000) throw PreconditionError("expr_truncate is capped at 10^4 elements");
  std::vector<OrderLabel> out;
  OrderLabel prefix;
  collect(e, n, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool expr_embed_check(const OrderExpr& e1, const OrderExpr& e2, std::size_t n) {
  if (n > 64) throw PreconditionError("expr_embed_check is capped at n = 64");
  const auto small = expr_truncate(e1, n);
  const auto large = expr_truncate(e2, 4 * n);
  // Two finite chains: a monotone injection exists iff the target is no shorter.
  return small.size() <= large.size();
}

namespace {

class OrderParser {
public:
  explicit OrderParser(std::string_view text) : text_(text) {}

  OrderPtr parse() {
    OrderPtr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError("order expression: " + msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  std::string identifier() {
    skip_space();
    std::size_t b = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(b, pos_ - b));
  }

  std::vector<OrderPtr> list_until(char stop) {
    std::vector<OrderPtr> items;
    if (peek(stop)) return items;
    items.push_back(expr());
    while (accept(',')) items.push_back(expr());
    return items;
  }

  OrderPtr expr() {
    const std::string name = identifier();
    expect('(');
    OrderPtr result;
    if (name == "fin") {
      skip_space();
      std::size_t b = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (b == pos_) fail("expected a count");
      result = fin(std::stoull(std::string(text_.substr(b, pos_ - b))));
    } else if (name == "sum") {
      auto parts = list_until(')');
      if (parts.empty()) fail("sum needs at least one part");
      result = sum(std::move(parts));
    } else if (name == "zsum") {
      OrderPtr left = expr();
      expect(';');
      auto middle = list_until(';');
      expect(';');
      OrderPtr right = expr();
      result = zsum(std::move(left), std::move(middle), std::move(right));
    } else {
      fail("unknown constructor '" + name + "'");
    }
    expect(')');
    return result;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

OrderPtr parse_order_expr(std::string_view text) { return OrderParser(text).parse(); }

std::string to_string(const OrderExpr& e) {
  return std::visit(Overloaded{
                        [](const OrderExpr::Fin& f) { return "fin(" + std::to_string(f.n) + ")"; },
                        [](const OrderExpr::Sum& s) {
                          std::string out = "sum(";
                          for (std::size_t i = 0; i < s.parts.size(); ++i) {
                            if (i) out += ", ";
                            out += to_string(*s.parts[i]);
                          }
                          return out + ")";
                        },
                        [](const OrderExpr::ZSum& z) {
                          std::string out = "zsum(" + to_string(*z.left) + "; ";
                          for (std::size_t i = 0; i < z.middle.size(); ++i) {
                            if (i) out += ", ";
                            out += to_string(*z.middle[i]);
                          }
                          return out + "; " + to_string(*z.right) + ")";
                        },
                    },
                    e.node);
}

}  // namespace ordlex
