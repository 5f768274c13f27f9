#include "ordlex/automata.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "ordlex/error.hpp"

namespace ordlex {

Dfa::Dfa(std::vector<std::array<State, 2>> delta, std::vector<bool> accepting, State initial)
    : delta_(std::move(delta)), accepting_(std::move(accepting)), initial_(initial) {
  if (delta_.empty() || accepting_.size() != delta_.size() || initial_ >= delta_.size()) {
    throw PreconditionError("malformed DFA");
  }
  for (const auto& row : delta_) {
    if (row[0] >= delta_.size() || row[1] >= delta_.size()) throw PreconditionError("DFA transition out of range");
  }
  std::vector<std::vector<State>> pred(size());
  for (State q = 0; q < size(); ++q) {
    pred[delta_[q][0]].push_back(q);
    pred[delta_[q][1]].push_back(q);
  }
  live_.assign(size(), false);
  std::vector<State> stack;
  for (State q = 0; q < size(); ++q) {
    if (accepting_[q]) {
      live_[q] = true;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State p : pred[q]) {
      if (!live_[p]) {
        live_[p] = true;
        stack.push_back(p);
      }
    }
  }
}

Dfa Dfa::empty() { return Dfa({{0, 0}}, {false}, 0); }

Dfa Dfa::universal() { return Dfa({{0, 0}}, {true}, 0); }

Dfa Dfa::power_prefix(std::string_view v0, std::string_view v1) {
  if (!is_proper_prefix(v1, v0)) throw PreconditionError("v1 must be a proper prefix of v0");
  const std::size_t m = v0.size();
  const State dead = m;
  std::vector<std::array<State, 2>> delta(m + 1, {dead, dead});
  std::vector<bool> accepting(m + 1, false);
  for (std::size_t i = 0; i < m; ++i) delta[i][v0[i] == '1' ? 1 : 0] = (i + 1) % m;
  accepting[v1.size()] = true;
  return Dfa(std::move(delta), std::move(accepting), 0);
}

Dfa Dfa::lex_below(std::string_view w) {
  const std::size_t n = w.size();
  const State below = n + 1, dead = n + 2;
  std::vector<std::array<State, 2>> delta(n + 3, {dead, dead});
  std::vector<bool> accepting(n + 3, false);
  for (std::size_t i = 0; i < n; ++i) {
    accepting[i] = true;  // a proper prefix of w
    if (w[i] == '1') {
      delta[i] = {below, i + 1};
    } else {
      delta[i] = {i + 1, dead};
    }
  }
  delta[below] = {below, below};
  accepting[below] = true;
  return Dfa(std::move(delta), std::move(accepting), 0);
}

Dfa Dfa::from_words(const std::vector<Word>& words) {
  std::vector<std::array<State, 2>> delta{{SIZE_MAX, SIZE_MAX}};
  std::vector<bool> accepting{false};
  for (const Word& w : words) {
    State q = 0;
    for (char c : w) {
      int b = c == '1' ? 1 : 0;
      if (delta[q][b] == SIZE_MAX) {
        delta[q][b] = delta.size();
        delta.push_back({SIZE_MAX, SIZE_MAX});
        accepting.push_back(false);
      }
      q = delta[q][b];
    }
    accepting[q] = true;
  }
  const State dead = delta.size();
  delta.push_back({dead, dead});
  accepting.push_back(false);
  for (auto& row : delta) {
    for (auto& t : row) {
      if (t == SIZE_MAX) t = dead;
    }
  }
  return Dfa(std::move(delta), std::move(accepting), 0).trimmed();
}

Dfa::State Dfa::run(State q, std::string_view w) const {
  for (char c : w) q = next(q, c);
  return q;
}

bool Dfa::accepts(std::string_view w) const { return accepting(run(initial_, w)); }

std::vector<bool> Dfa::reachable() const {
  std::vector<bool> seen(size(), false);
  std::vector<State> stack{initial_};
  seen[initial_] = true;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (int b = 0; b < 2; ++b) {
      if (!seen[delta_[q][b]]) {
        seen[delta_[q][b]] = true;
        stack.push_back(delta_[q][b]);
      }
    }
  }
  return seen;
}

namespace {

// Breadth-first search exploring 0 before 1, so the first word found is the
// lex-least among the shortest ones.
std::optional<Word> bfs_word(const Dfa& d, Dfa::State from, const std::function<bool(Dfa::State)>& goal) {
  std::vector<std::optional<std::pair<Dfa::State, char>>> parent(d.size());
  std::vector<bool> seen(d.size(), false);
  std::deque<Dfa::State> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    Dfa::State q = queue.front();
    queue.pop_front();
    if (goal(q)) {
      Word w;
      for (Dfa::State cur = q; parent[cur]; cur = parent[cur]->first) w += parent[cur]->second;
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (int b = 0; b < 2; ++b) {
      Dfa::State r = d.next(q, b);
      if (!seen[r]) {
        seen[r] = true;
        parent[r] = std::make_pair(q, static_cast<char>('0' + b));
        queue.push_back(r);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Word> Dfa::access_word(State q) const {
  return bfs_word(*this, initial_, [q](State s) { return s == q; });
}

std::optional<Word> Dfa::path_word(State from, State to) const {
  return bfs_word(*this, from, [to](State s) { return s == to; });
}

std::optional<Word> Dfa::shortest_accepted_from(State q) const {
  return bfs_word(*this, q, [this](State s) { return accepting_[s]; });
}

Dfa Dfa::trimmed() const {
  if (!live_[initial_]) return empty();
  std::vector<State> remap(size(), SIZE_MAX);
  std::vector<State> order{initial_};
  remap[initial_] = 0;
  bool needs_dead = false;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int b = 0; b < 2; ++b) {
      State r = delta_[order[i]][b];
      if (!live_[r]) {
        needs_dead = true;
      } else if (remap[r] == SIZE_MAX) {
        remap[r] = order.size();
        order.push_back(r);
      }
    }
  }
  const State dead = order.size();
  std::vector<std::array<State, 2>> delta;
  std::vector<bool> accepting;
  for (State q : order) {
    std::array<State, 2> row{};
    for (int b = 0; b < 2; ++b) {
      State r = delta_[q][b];
      row[b] = live_[r] ? remap[r] : dead;
    }
    delta.push_back(row);
    accepting.push_back(accepting_[q]);
  }
  if (needs_dead) {
    delta.push_back({dead, dead});
    accepting.push_back(false);
  }
  return Dfa(std::move(delta), std::move(accepting), 0);
}

Dfa Dfa::complement() const {
  std::vector<bool> flipped(size());
  for (State q = 0; q < size(); ++q) flipped[q] = !accepting_[q];
  return Dfa(delta_, std::move(flipped), initial_).trimmed();
}

std::vector<bool> Dfa::infinite_residual() const {
  const SccInfo scc = dfa_components(*this, live_);
  std::vector<bool> infinite(size(), false);
  std::vector<std::vector<State>> pred(size());
  for (State q = 0; q < size(); ++q) {
    if (!live_[q]) continue;
    for (int b = 0; b < 2; ++b) {
      if (live_[delta_[q][b]]) pred[delta_[q][b]].push_back(q);
    }
  }
  std::vector<State> stack;
  for (State q = 0; q < size(); ++q) {
    if (scc.on_cycle[q]) {
      infinite[q] = true;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State p : pred[q]) {
      if (!infinite[p]) {
        infinite[p] = true;
        stack.push_back(p);
      }
    }
  }
  return infinite;
}

namespace {

Dfa product(const Dfa& a, const Dfa& b, bool (*combine)(bool, bool)) {
  std::map<std::pair<Dfa::State, Dfa::State>, Dfa::State> ids;
  std::vector<std::pair<Dfa::State, Dfa::State>> order;
  auto id_of = [&](Dfa::State x, Dfa::State y) {
    auto [it, inserted] = ids.emplace(std::make_pair(x, y), order.size());
    if (inserted) order.emplace_back(x, y);
    return it->second;
  };
  id_of(a.initial(), b.initial());
  std::vector<std::array<Dfa::State, 2>> delta;
  std::vector<bool> accepting;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto [x, y] = order[i];
    std::array<Dfa::State, 2> row{};
    for (int bit = 0; bit < 2; ++bit) row[bit] = id_of(a.next(x, bit), b.next(y, bit));
    delta.push_back(row);
    accepting.push_back(combine(a.accepting(x), b.accepting(y)));
  }
  return Dfa(std::move(delta), std::move(accepting), 0).trimmed();
}

}  // namespace

Dfa intersect(const Dfa& a, const Dfa& b) {
  return product(a, b, [](bool x, bool y) { return x && y; });
}

Dfa unite(const Dfa& a, const Dfa& b) {
  return product(a, b, [](bool x, bool y) { return x || y; });
}

SccInfo dfa_components(const Dfa& d, const std::vector<bool>& keep) {
  const std::size_t n = d.size();
  SccInfo info;
  info.component.assign(n, SIZE_MAX);
  info.on_cycle.assign(n, false);
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Dfa::State> stack;
  int counter = 0;
  std::function<void(Dfa::State)> visit = [&](Dfa::State v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int b = 0; b < 2; ++b) {
      Dfa::State w = d.next(v, b);
      if (!keep[w]) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<Dfa::State> members;
      Dfa::State w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        info.component[w] = info.count;
        members.push_back(w);
      } while (w != v);
      const bool cyclic = members.size() > 1 || (keep[d.next(v, 0)] && d.next(v, 0) == v) ||
                          (keep[d.next(v, 1)] && d.next(v, 1) == v);
      for (Dfa::State m : members) info.on_cycle[m] = cyclic;
      ++info.count;
    }
  };
  for (Dfa::State v = 0; v < n; ++v) {
    if (keep[v] && index[v] < 0) visit(v);
  }
  return info;
}

Dfa right_linear_to_dfa(const Grammar& g) {
  if (!g.alphabet().is_binary()) throw PreconditionError("right_linear_to_dfa needs the alphabet 0 < 1");
  if (!is_right_linear(g)) throw PreconditionError("grammar is not right-linear");

  // NFA: one state per nonterminal, fresh states inside terminal runs, one final.
  struct Edge {
    std::size_t to;
    int bit;  // -1 for an epsilon move
  };
  std::vector<std::vector<Edge>> edges(g.size());
  const std::size_t final_state = edges.size();
  edges.emplace_back();
  auto fresh = [&] {
    edges.emplace_back();
    return edges.size() - 1;
  };
  for (std::size_t nt = 0; nt < g.size(); ++nt) {
    for (const auto& rhs : g.rules(nt)) {
      const bool tail_nt = !rhs.empty() && !rhs.back().is_terminal();
      const std::size_t target = tail_nt ? rhs.back().index() : final_state;
      const std::size_t letters = tail_nt ? rhs.size() - 1 : rhs.size();
      std::size_t cur = nt;
      for (std::size_t i = 0; i < letters; ++i) {
        const std::size_t to = i + 1 == letters ? target : fresh();
        edges[cur].push_back({to, rhs[i].letter() == '1' ? 1 : 0});
        cur = to;
      }
      if (letters == 0) edges[cur].push_back({target, -1});
    }
  }
  auto closure = [&](std::set<std::size_t> s) {
    std::vector<std::size_t> todo(s.begin(), s.end());
    while (!todo.empty()) {
      std::size_t q = todo.back();
      todo.pop_back();
      for (const Edge& e : edges[q]) {
        if (e.bit < 0 && s.insert(e.to).second) todo.push_back(e.to);
      }
    }
    return s;
  };
  std::set<std::size_t> start{g.start()};
  if (g.flags().epsilon_in_language) start.insert(final_state);
  std::map<std::set<std::size_t>, Dfa::State> ids;
  std::vector<std::set<std::size_t>> order;
  auto id_of = [&](const std::set<std::size_t>& s) {
    auto [it, inserted] = ids.emplace(s, order.size());
    if (inserted) order.push_back(s);
    return it->second;
  };
  id_of(closure(start));
  std::vector<std::array<Dfa::State, 2>> delta;
  std::vector<bool> accepting;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto current = order[i];
    std::array<Dfa::State, 2> row{};
    for (int b = 0; b < 2; ++b) {
      std::set<std::size_t> moved;
      for (std::size_t q : current) {
        for (const Edge& e : edges[q]) {
          if (e.bit == b) moved.insert(e.to);
        }
      }
      row[b] = id_of(closure(moved));
    }
    delta.push_back(row);
    accepting.push_back(current.count(final_state) > 0);
  }
  return Dfa(std::move(delta), std::move(accepting), 0).trimmed();
}

std::vector<Word> dfa_words(const Dfa& d, std::size_t max_length) {
  std::vector<Word> out;
  Word prefix;
  std::function<void(Dfa::State)> walk = [&](Dfa::State q) {
    if (!d.live(q)) return;
    if (d.accepting(q)) out.push_back(prefix);
    if (prefix.size() == max_length) return;
    for (char c : {'0', '1'}) {
      prefix.push_back(c);
      walk(d.next(q, c));
      prefix.pop_back();
    }
  };
  walk(d.initial());
  return out;
}

std::vector<Word> dfa_lex_first(const Dfa& d, std::size_t n) {
  if (!regular_well_ordered(d).well_ordered) {
    throw PreconditionError("dfa_lex_first needs a well-ordered language");
  }
  std::vector<Word> out;
  Word prefix;
  // In a well-ordered automaton every pass around a cycle yields a word, so
  // the recursion depth stays below (n + 1) * |states|.
  const std::size_t guard = (n + 1) * (d.size() + 1) + 1;
  std::function<void(Dfa::State)> walk = [&](Dfa::State q) {
    if (out.size() >= n || !d.live(q)) return;
    if (prefix.size() > guard) throw Error("internal: lex enumeration did not progress");
    if (d.accepting(q)) out.push_back(prefix);
    for (char c : {'0', '1'}) {
      if (out.size() >= n) return;
      prefix.push_back(c);
      walk(d.next(q, c));
      prefix.pop_back();
    }
  };
  walk(d.initial());
  return out;
}

RegularRank regular_scattered_rank(const Dfa& d) {
  const std::size_t n = d.size();
  RegularRank result;
  result.marking.value.assign(n, Ordinal{});
  std::vector<bool> unassigned = d.infinite_residual();

  for (std::uint64_t round = 1;; ++round) {
    if (std::none_of(unassigned.begin(), unassigned.end(), [](bool b) { return b; })) break;
    const SccInfo scc = dfa_components(d, unassigned);
    std::vector<bool> branching(n, false);
    for (Dfa::State q = 0; q < n; ++q) {
      branching[q] = unassigned[q] && unassigned[d.next(q, 0)] && unassigned[d.next(q, 1)];
    }
    // Cycle states that reach a branching state: their unfolding has
    // infinitely many branch points.
    std::vector<bool> reaches_branch(n, false);
    for (bool changed = true; changed;) {
      changed = false;
      for (Dfa::State q = 0; q < n; ++q) {
        if (!unassigned[q] || reaches_branch[q]) continue;
        bool hit = branching[q];
        for (int b = 0; b < 2 && !hit; ++b) {
          Dfa::State r = d.next(q, b);
          hit = unassigned[r] && reaches_branch[r];
        }
        if (hit) reaches_branch[q] = changed = true;
      }
    }
    std::vector<bool> bad(n, false);
    for (Dfa::State q = 0; q < n; ++q) bad[q] = scc.on_cycle[q] && reaches_branch[q];
    for (bool changed = true; changed;) {
      changed = false;
      for (Dfa::State q = 0; q < n; ++q) {
        if (!unassigned[q] || bad[q]) continue;
        for (int b = 0; b < 2; ++b) {
          Dfa::State r = d.next(q, b);
          if (unassigned[r] && bad[r]) {
            bad[q] = changed = true;
            break;
          }
        }
      }
    }
    bool progressed = false;
    std::vector<bool> next_unassigned = unassigned;
    for (Dfa::State q = 0; q < n; ++q) {
      if (unassigned[q] && !bad[q]) {
        result.marking.value[q] = Ordinal::finite(round);
        next_unassigned[q] = false;
        progressed = true;
      }
    }
    if (!progressed) {
      // Stuck: a bottom component of the unassigned graph contains a state
      // with both successors inside it; its two return loops witness density.
      std::vector<bool> has_exit(scc.count, false);
      for (Dfa::State q = 0; q < n; ++q) {
        if (!unassigned[q]) continue;
        for (int b = 0; b < 2; ++b) {
          Dfa::State r = d.next(q, b);
          if (unassigned[r] && scc.component[r] != scc.component[q]) has_exit[scc.component[q]] = true;
        }
      }
      for (Dfa::State q = 0; q < n; ++q) {
        if (!branching[q] || has_exit[scc.component[q]]) continue;
        auto back0 = d.path_word(d.next(q, 0), q);
        auto back1 = d.path_word(d.next(q, 1), q);
        if (!back0 || !back1) continue;
        result.scattered = false;
        result.witness = DenseWitness{q, d.access_word(q).value_or(Word{}), "0" + *back0, "1" + *back1};
        break;
      }
      if (!result.witness) throw Error("internal: no dense witness in a stuck peeling round");
      result.rank = Ordinal{};
      return result;
    }
    unassigned = std::move(next_unassigned);
  }
  result.rank = result.marking.value[d.initial()];
  return result;
}

WellOrderResult regular_well_ordered(const Dfa& d) {
  const std::vector<bool> reach = d.reachable();
  std::vector<bool> keep(d.size());
  for (Dfa::State q = 0; q < d.size(); ++q) keep[q] = reach[q] && d.live(q);
  const SccInfo scc = dfa_components(d, keep);
  for (Dfa::State p = 0; p < d.size(); ++p) {
    if (!keep[p]) continue;
    const Dfa::State zero = d.next(p, 0), one = d.next(p, 1);
    if (!keep[zero] || scc.component[zero] != scc.component[p] || !d.live(one)) continue;
    // A loop through the 0-edge with a live 1-sibling: v = 0..., w = 1...
    WellOrderResult r;
    r.well_ordered = false;
    r.descent = DescentWitness{*d.access_word(p), "0" + *d.path_word(zero, p),
                               "1" + *d.shortest_accepted_from(one)};
    return r;
  }
  return {};
}

Ordinal regular_order_type(const Dfa& d) {
  if (!regular_well_ordered(d).well_ordered) {
    throw PreconditionError("regular_order_type needs a well-ordered language");
  }
  const std::size_t n = d.size();
  std::vector<bool> keep(n);
  for (Dfa::State q = 0; q < n; ++q) keep[q] = d.live(q);
  const SccInfo scc = dfa_components(d, keep);
  std::vector<std::optional<Ordinal>> memo(n);
  const Ordinal one = Ordinal::finite(1);

  std::function<Ordinal(Dfa::State)> solve = [&](Dfa::State q) -> Ordinal {
    if (!d.live(q)) return Ordinal{};
    if (memo[q]) return *memo[q];
    if (!scc.on_cycle[q]) {
      Ordinal t = d.accepting(q) ? one : Ordinal{};
      t = t + solve(d.next(q, 0));
      t = t + solve(d.next(q, 1));
      return *(memo[q] = t);
    }
    // Well-ordered: the component is a simple cycle p0 -> p1 -> ... -> p0,
    // and ot(p_i) = sigma_i + ot(p_{i+1}) whose least solution is a rotation
    // of (sigma_0 + ... + sigma_{m-1}) * w.
    std::vector<Dfa::State> cycle{q};
    std::vector<Ordinal> sigma;
    for (Dfa::State cur = q;;) {
      int in_bit = -1;
      for (int b = 0; b < 2; ++b) {
        Dfa::State r = d.next(cur, b);
        if (d.live(r) && scc.component[r] == scc.component[cur]) {
          if (in_bit >= 0) throw Error("internal: branching cycle in a well-ordered automaton");
          in_bit = b;
        }
      }
      Ordinal s = d.accepting(cur) ? one : Ordinal{};
      if (in_bit == 1) s = s + solve(d.next(cur, 0));
      sigma.push_back(s);
      cur = d.next(cur, in_bit);
      if (cur == q) break;
      cycle.push_back(cur);
    }
    const std::size_t m = cycle.size();
    for (std::size_t i = 0; i < m; ++i) {
      Ordinal total;
      for (std::size_t k = 0; k < m; ++k) total = total + sigma[(i + k) % m];
      memo[cycle[i]] = total * Ordinal::omega();
    }
    return *memo[q];
  };
  return solve(d.initial());
}

}  // namespace ordlex
