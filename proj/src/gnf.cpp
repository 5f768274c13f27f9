// Greibach normal form: epsilon elimination, unit elimination, left-recursion
// removal over a fixed nonterminal order, head substitution, and terminal
// wrappers for non-head positions.

#include <algorithm>
#include <functional>
#include <map>

#include "ordlex/error.hpp"
#include "ordlex/grammar.hpp"

namespace ordlex {

namespace {

Grammar eliminate_epsilon(const Grammar& g) {
  const auto nullable = nullable_nonterminals(g);
  Grammar out = g;
  for (std::size_t nt = 0; nt < g.size(); ++nt) {
    std::vector<Rhs> expanded;
    for (const auto& rhs : g.rules(nt)) {
      std::vector<Rhs> partial{Rhs{}};
      for (const Symbol& s : rhs) {
        std::vector<Rhs> next;
        for (const auto& p : partial) {
          Rhs with = p;
          with.push_back(s);
          next.push_back(std::move(with));
          if (!s.is_terminal() && nullable[s.index()]) next.push_back(p);
        }
        partial = std::move(next);
      }
      for (auto& p : partial) {
        if (!p.empty()) expanded.push_back(std::move(p));
      }
    }
    out.set_rules(nt, std::move(expanded));
  }
  out.flags().epsilon_in_language = g.flags().epsilon_in_language || nullable[g.start()];
  return out;
}

bool is_unit(const Rhs& rhs) { return rhs.size() == 1 && !rhs[0].is_terminal(); }

Grammar eliminate_units(const Grammar& g) {
  const std::size_t n = g.size();
  Grammar out = g;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> order{a};
    seen[a] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (const auto& rhs : g.rules(order[i])) {
        if (is_unit(rhs) && !seen[rhs[0].index()]) {
          seen[rhs[0].index()] = true;
          order.push_back(rhs[0].index());
        }
      }
    }
    std::vector<Rhs> rules;
    for (std::size_t b : order) {
      for (const auto& rhs : g.rules(b)) {
        if (!is_unit(rhs)) rules.push_back(rhs);
      }
    }
    out.set_rules(a, std::move(rules));
  }
  return out;
}

Rhs concat(const Rhs& head, const Rhs& rest, std::size_t skip) {
  Rhs out = head;
  out.insert(out.end(), rest.begin() + static_cast<std::ptrdiff_t>(skip), rest.end());
  return out;
}

// Paull's algorithm. Input must be epsilon-free and unit-free.
Grammar remove_left_recursion(const Grammar& g) {
  Grammar out = g;
  const std::size_t original = g.size();
  for (std::size_t i = 0; i < original; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<Rhs> rules;
      for (const auto& rhs : out.rules(i)) {
        if (!rhs[0].is_terminal() && rhs[0].index() == j) {
          for (const auto& sub : out.rules(j)) rules.push_back(concat(sub, rhs, 1));
        } else {
          rules.push_back(rhs);
        }
      }
      out.set_rules(i, std::move(rules));
    }
    std::vector<Rhs> alphas, betas;
    for (const auto& rhs : out.rules(i)) {
      if (!rhs[0].is_terminal() && rhs[0].index() == i) {
        if (rhs.size() > 1) alphas.emplace_back(rhs.begin() + 1, rhs.end());
      } else {
        betas.push_back(rhs);
      }
    }
    if (alphas.empty()) continue;
    if (betas.empty()) throw Error("internal: left-recursive nonterminal without a base case");
    const std::size_t tail = out.add_nonterminal(out.fresh_name());
    std::vector<Rhs> head_rules, tail_rules;
    for (const auto& b : betas) {
      head_rules.push_back(b);
      Rhs with = b;
      with.push_back(Symbol::nonterminal(tail));
      head_rules.push_back(std::move(with));
    }
    for (const auto& a : alphas) {
      tail_rules.push_back(a);
      Rhs with = a;
      with.push_back(Symbol::nonterminal(tail));
      tail_rules.push_back(std::move(with));
    }
    out.set_rules(i, std::move(head_rules));
    out.set_rules(tail, std::move(tail_rules));
  }
  return out;
}

// After left-recursion removal the head-of-rule relation is acyclic, so
// substituting heads bottom-up terminates.
Grammar substitute_heads(const Grammar& g) {
  const std::size_t n = g.size();
  std::vector<int> state(n, 0);  // 0 new, 1 in progress, 2 done
  std::vector<std::vector<Rhs>> expanded(n);
  std::function<void(std::size_t)> expand = [&](std::size_t a) {
    if (state[a] == 2) return;
    if (state[a] == 1) throw Error("internal: left recursion survived elimination");
    state[a] = 1;
    for (const auto& rhs : g.rules(a)) {
      if (rhs[0].is_terminal()) {
        expanded[a].push_back(rhs);
        continue;
      }
      const std::size_t b = rhs[0].index();
      expand(b);
      for (const auto& sub : expanded[b]) expanded[a].push_back(concat(sub, rhs, 1));
    }
    state[a] = 2;
  };
  Grammar out = g;
  for (std::size_t a = 0; a < n; ++a) {
    expand(a);
    out.set_rules(a, expanded[a]);
  }
  return out;
}

Grammar wrap_inner_terminals(const Grammar& g) {
  Grammar out = g;
  std::map<char, std::size_t> wrappers;
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Rhs> rules;
    for (Rhs rhs : g.rules(a)) {
      for (std::size_t i = 1; i < rhs.size(); ++i) {
        if (!rhs[i].is_terminal()) continue;
        const char letter = rhs[i].letter();
        auto it = wrappers.find(letter);
        if (it == wrappers.end()) {
          const std::size_t w = out.add_nonterminal(out.fresh_name());
          out.add_rule(w, Rhs{Symbol::terminal(letter)});
          it = wrappers.emplace(letter, w).first;
        }
        rhs[i] = Symbol::nonterminal(it->second);
      }
      rules.push_back(std::move(rhs));
    }
    out.set_rules(a, std::move(rules));
  }
  return out;
}

}  // namespace

GnfResult to_gnf(const Grammar& g) {
  GnfResult result;
  auto reduced = reduce_grammar(g);
  if (!reduced) return result;
  Grammar work = eliminate_epsilon(*reduced);
  result.epsilon_in_language = work.flags().epsilon_in_language;
  auto step = reduce_grammar(work);
  if (!step) return result;
  step = reduce_grammar(eliminate_units(*step));
  if (!step) return result;
  work = wrap_inner_terminals(substitute_heads(remove_left_recursion(*step)));
  step = reduce_grammar(work);
  if (!step) return result;
  step->flags().gnf = true;
  step->flags().reduced = true;
  step->flags().epsilon_in_language = result.epsilon_in_language;
  if (!is_gnf(*step)) throw Error("internal: GNF conversion produced a non-GNF rule");
  result.grammar = std::move(step);
  return result;
}

}  // namespace ordlex
