#include "ordlex/scatter.hpp"

#include <algorithm>

#include "ordlex/error.hpp"

namespace ordlex {

namespace {

std::string unused_name(const Grammar& g, const std::string& base) {
  if (!g.find(base)) return base;
  for (std::size_t k = 1;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!g.find(candidate)) return candidate;
  }
}

void require_binary_gnf(const Grammar& g, const char* what) {
  if (!g.alphabet().is_binary()) throw PreconditionError(std::string(what) + " needs the alphabet 0 < 1");
  if (!is_gnf(g)) throw PreconditionError(std::string(what) + " needs a grammar in Greibach normal form");
}

bool is_rotation_of(const Word& a, const Word& b) {
  return a.size() == b.size() && (a + a).find(b) != Word::npos;
}

}  // namespace

std::optional<Grammar> left_prefix_grammar(const Grammar& g, std::size_t x, std::size_t y) {
  require_binary_gnf(g, "left_prefix_grammar");
  const std::size_t n = g.size();
  if (x >= n || y >= n) throw PreconditionError("nonterminal out of range");
  Grammar out = g;
  out.flags() = GrammarFlags{};
  std::vector<std::size_t> spine(n);
  for (std::size_t z = 0; z < n; ++z) spine[z] = out.add_nonterminal(unused_name(out, "_L_" + g.name(z)));
  const std::size_t start = out.add_nonterminal(unused_name(out, "_L_start"));
  std::vector<Rhs> start_rules;
  for (std::size_t z = 0; z < n; ++z) {
    for (const Rhs& rhs : g.rules(z)) {
      for (std::size_t j = 1; j < rhs.size(); ++j) {
        Rhs r(rhs.begin(), rhs.begin() + static_cast<std::ptrdiff_t>(j));
        r.push_back(Symbol::nonterminal(spine[rhs[j].index()]));
        if (z == x) start_rules.push_back(r);
        out.add_rule(spine[z], std::move(r));
      }
    }
  }
  out.add_rule(spine[y], Rhs{});
  out.set_rules(start, std::move(start_rules));
  out.set_start(start);
  return reduce_grammar(out);
}

ScatterReport check_scattered_cfg(const Grammar& g) {
  require_binary_gnf(g, "check_scattered_cfg");
  const StructureReport s = structure(g);
  const Dfa everything = Dfa::universal();
  ScatterReport report;

  for (const auto& component : s.components) {
    if (!s.recursive[component.front()]) continue;
    ComponentCertificate cert;
    cert.component = component;
    for (std::size_t x : component) {
      auto pump = left_prefix_grammar(g, x, x);
      if (!pump) throw Error("internal: recursive nonterminal without a pumping derivation");
      const Word w = *shortest_word_in(*pump, everything);
      const Word root = primitive_root(w).root;
      if (cert.u0.empty()) {
        cert.u0 = root;
      } else if (!is_rotation_of(cert.u0, root)) {
        cert.conjugacy_consistent = false;
      }
    }

    for (std::size_t x : component) {
      for (std::size_t y : component) {
        auto prefixes = left_prefix_grammar(g, x, y);
        if (!prefixes) continue;  // vacuous
        const Word shortest = *shortest_word_in(*prefixes, everything);
        std::optional<ConjugatePair> found;
        std::vector<CandidateCounterexample> misses;
        for (std::size_t r = 0; r < cert.u0.size() && !found; ++r) {
          const Word v0 = rotate(cert.u0, r);
          for (std::size_t len = 0; len < v0.size(); ++len) {
            const Word v1 = v0.substr(0, len);
            if (!in_power_prefix(v0, v1, shortest)) {
              misses.push_back({{v0, v1}, shortest});
              continue;
            }
            InclusionResult inc = cfg_regular_inclusion(*prefixes, Dfa::power_prefix(v0, v1));
            if (inc.holds) {
              found = ConjugatePair{v0, v1};
              break;
            }
            misses.push_back({{v0, v1}, *inc.counterexample});
          }
        }
        if (found) {
          cert.pairs.emplace(std::make_pair(x, y), *found);
          continue;
        }
        ScatterFailure failure;
        failure.component = component;
        failure.x = x;
        failure.y = y;
        failure.u0 = cert.u0;
        failure.counterexample = misses.front().counterexample;
        for (const auto& m : misses) {
          if (!conjugate_align(cert.u0, m.counterexample)) {
            failure.counterexample = m.counterexample;
            break;
          }
        }
        failure.candidates = std::move(misses);
        report.scattered = false;
        report.failure = std::move(failure);
        return report;
      }
    }
    report.certificates.push_back(std::move(cert));
  }
  return report;
}

RankBoundReport rank_bound_cfg(const Grammar& g, const StructureReport& s, const ScatterReport& verdict) {
  if (!verdict.scattered) throw PreconditionError("rank bounds need a scattered verdict");
  require_binary_gnf(g, "rank_bound_cfg");
  const std::size_t n = g.size();
  RankBoundReport report;
  report.per_nonterminal.assign(n, Ordinal{});
  std::vector<bool> done(n, false);

  // Components in order of increasing height: every child of a non-recursive
  // nonterminal lies strictly lower.
  std::vector<std::size_t> order(s.components.size());
  for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return s.height[a] < s.height[b]; });
  for (std::size_t c : order) {
    const std::size_t h = s.height[c];
    const Ordinal cap = omega_power(Ordinal::finite(h)) + Ordinal::finite(1);
    for (std::size_t x : s.components[c]) {
      if (s.recursive[x]) {
        report.per_nonterminal[x] = cap;
      } else if (h > 0) {
        Ordinal best;
        for (const Rhs& rhs : g.rules(x)) {
          Ordinal sum;  // r(K L) <= r(L) + r(K): children summed right to left
          for (std::size_t i = rhs.size(); i-- > 1;) {
            if (!done[rhs[i].index()]) throw Error("internal: child bound requested before it was computed");
            sum = sum + report.per_nonterminal[rhs[i].index()];
          }
          best = ord_max(best, sum);
        }
        report.per_nonterminal[x] = std::min(best, cap);
      }
      done[x] = true;
    }
  }
  report.overall = report.per_nonterminal[g.start()];
  return report;
}

}  // namespace ordlex
