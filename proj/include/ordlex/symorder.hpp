#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ordlex/ordinal.hpp"

namespace ordlex {

struct OrderExpr;
using OrderPtr = std::shared_ptr<const OrderExpr>;

/// A symbolic scattered linear order built from finite chains, finite ordered
/// sums, and Z-indexed sums whose index sequence is eventually constant.
struct OrderExpr {
  struct Fin {
    std::uint64_t n = 0;
  };
  struct Sum {
    std::vector<OrderPtr> parts;
  };
  /// ... + left + left + middle[0] + ... + middle[k] + right + right + ...
  struct ZSum {
    OrderPtr left;
    std::vector<OrderPtr> middle;
    OrderPtr right;
  };

  std::variant<Fin, Sum, ZSum> node;
};

OrderPtr fin(std::uint64_t n);
OrderPtr sum(std::vector<OrderPtr> parts);
OrderPtr zsum(OrderPtr left, std::vector<OrderPtr> middle, OrderPtr right);
/// w and w* and Z as Z-sums of singletons.
OrderPtr omega_order();
OrderPtr omega_star_order();
OrderPtr zeta_order();

bool expr_is_empty(const OrderExpr& e);
bool expr_is_finite(const OrderExpr& e);

/// Hausdorff rank: finite orders 0, finite sums take the max, and an
/// infinite tail of rank a lifts the rank to a + 1.
Ordinal expr_rank(const OrderExpr& e);

/// Position of an element: one index per nesting level. Indices within a
/// Z-sum are negative for left-tail copies, so comparing labels as integer
/// sequences follows the order.
using OrderLabel = std::vector<std::int64_t>;

/// Up to n elements, sorted: finite parts in full, Z-sums middle-out.
/// Throws PreconditionError for n > 10^4.
std::vector<OrderLabel> expr_truncate(const OrderExpr& e, std::size_t n);

/// Whether the n-element window of e1 embeds into the 4n-element window of
/// e2 (both finite chains). Throws PreconditionError for n > 64.
bool expr_embed_check(const OrderExpr& e1, const OrderExpr& e2, std::size_t n);

/// Text syntax: fin(n), sum(e, ...), zsum(left; mid, ...; right). Throws ParseError.
OrderPtr parse_order_expr(std::string_view text);
std::string to_string(const OrderExpr& e);

}  // namespace ordlex
