#include <deque>
#include <map>

#include "ordlex/error.hpp"
#include "ordlex/scatter.hpp"

namespace ordlex {

namespace {

// Condition iii at state level: inside the subgraph of live states carrying
// exactly `v`, no state with two such successors is reachable from a cycle.
bool finite_paths_at(const Dfa& d, const MarkingTable& m, Dfa::State q) {
  const Ordinal& v = m.value[q];
  std::vector<bool> keep(d.size(), false);
  std::vector<Dfa::State> stack{q};
  keep[q] = true;
  while (!stack.empty()) {
    Dfa::State p = stack.back();
    stack.pop_back();
    for (int b = 0; b < 2; ++b) {
      Dfa::State r = d.next(p, b);
      if (d.live(r) && !keep[r] && m.value[r] == v) {
        keep[r] = true;
        stack.push_back(r);
      }
    }
  }
  const SccInfo scc = dfa_components(d, keep);
  std::vector<bool> from_cycle(d.size(), false);
  for (Dfa::State p = 0; p < d.size(); ++p) {
    if (scc.on_cycle[p]) {
      from_cycle[p] = true;
      stack.push_back(p);
    }
  }
  while (!stack.empty()) {
    Dfa::State p = stack.back();
    stack.pop_back();
    for (int b = 0; b < 2; ++b) {
      Dfa::State r = d.next(p, b);
      if (keep[r] && !from_cycle[r]) {
        from_cycle[r] = true;
        stack.push_back(r);
      }
    }
  }
  for (Dfa::State p = 0; p < d.size(); ++p) {
    if (from_cycle[p] && keep[d.next(p, 0)] && keep[d.next(p, 1)]) return false;
  }
  return true;
}

}  // namespace

MarkingCheck validate_marking(const Dfa& d, const MarkingTable& m, std::size_t depth) {
  if (depth > 16) throw PreconditionError("validate_marking depth is capped at 16");
  if (m.value.size() != d.size()) throw PreconditionError("marking table size does not match the automaton");
  const std::vector<bool> infinite = d.infinite_residual();
  std::vector<std::optional<MarkingCondition>> verdict(d.size());
  std::vector<bool> checked(d.size(), false);
  auto check_state = [&](Dfa::State q) -> std::optional<MarkingCondition> {
    if (checked[q]) return verdict[q];
    checked[q] = true;
    const Ordinal& v = m.value[q];
    if (v.is_zero() == infinite[q]) return verdict[q] = MarkingCondition::Finiteness;
    Ordinal child_max;
    for (int b = 0; b < 2; ++b) {
      if (d.live(d.next(q, b))) child_max = ord_max(child_max, m.value[d.next(q, b)]);
    }
    if (child_max != v) return verdict[q] = MarkingCondition::MaxOfChildren;
    if (!v.is_zero() && !finite_paths_at(d, m, q)) return verdict[q] = MarkingCondition::FinitePaths;
    return std::nullopt;
  };

  MarkingCheck result;
  if (!d.live(d.initial())) return result;
  std::deque<std::pair<Word, Dfa::State>> queue{{Word{}, d.initial()}};
  while (!queue.empty()) {
    auto [word, q] = queue.front();
    queue.pop_front();
    if (auto bad = check_state(q)) {
      result.valid = false;
      result.condition = bad;
      result.node = word;
      return result;
    }
    if (word.size() == depth) continue;
    for (char c : {'0', '1'}) {
      const Dfa::State r = d.next(q, c);
      if (d.live(r)) queue.emplace_back(word + c, r);
    }
  }
  return result;
}

MarkedDfa merge_markings(const Dfa& d0, const MarkingTable& m0, const Dfa& d1, const MarkingTable& m1) {
  constexpr std::size_t kDepth = 10;
  if (!validate_marking(d0, m0, kDepth).valid || !validate_marking(d1, m1, kDepth).valid) {
    throw PreconditionError("merge_markings needs valid input markings");
  }
  std::map<std::pair<Dfa::State, Dfa::State>, Dfa::State> ids;
  std::vector<std::pair<Dfa::State, Dfa::State>> order;
  auto id_of = [&](Dfa::State x, Dfa::State y) {
    auto [it, inserted] = ids.emplace(std::make_pair(x, y), order.size());
    if (inserted) order.emplace_back(x, y);
    return it->second;
  };
  id_of(d0.initial(), d1.initial());
  std::vector<std::array<Dfa::State, 2>> delta;
  std::vector<bool> accepting;
  MarkingTable merged;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto [x, y] = order[i];
    std::array<Dfa::State, 2> row{};
    for (int b = 0; b < 2; ++b) row[b] = id_of(d0.next(x, b), d1.next(y, b));
    delta.push_back(row);
    accepting.push_back(d0.accepting(x) || d1.accepting(y));
    // Nodes outside a tree domain carry 0 whatever the table says.
    merged.value.push_back(ord_max(d0.live(x) ? m0.value[x] : Ordinal{}, d1.live(y) ? m1.value[y] : Ordinal{}));
  }
  return {Dfa(std::move(delta), std::move(accepting), 0), std::move(merged)};
}

}  // namespace ordlex
