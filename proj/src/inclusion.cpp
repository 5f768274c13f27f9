// Shortest word of a context-free language inside a regular one: least
// lengths of (X, p, q) triples by relaxation to a fixpoint, then rebuilt from
// back pointers.

#include <functional>
#include <limits>

#include "ordlex/automata.hpp"
#include "ordlex/error.hpp"

namespace ordlex {

namespace {

constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kMaxWitnessLength = 1u << 20;

std::uint64_t add_sat(std::uint64_t a, std::uint64_t b) {
  if (a == kInf || b == kInf) return kInf;
  std::uint64_t s;
  if (__builtin_add_overflow(a, b, &s)) return kInf;
  return s;
}

struct Back {
  std::size_t rule = SIZE_MAX;   // index into the flat rule list
  std::vector<Dfa::State> path;  // states before and after every symbol
};

class TripleSolver {
public:
  TripleSolver(const Grammar& g, const Dfa& d) : g_(g), d_(d), n_(d.size()) {
    for (std::size_t x = 0; x < g.size(); ++x) {
      for (const auto& rhs : g.rules(x)) rules_.push_back({x, &rhs});
    }
    dist_.assign(g.size() * n_ * n_, kInf);
    back_.resize(dist_.size());
    solve();
  }

  std::uint64_t dist(std::size_t x, Dfa::State p, Dfa::State q) const { return dist_[at(x, p, q)]; }

  Word word(std::size_t x, Dfa::State p, Dfa::State q) const {
    Word out;
    build(x, p, q, out, 0);
    return out;
  }

private:
  struct Rule {
    std::size_t lhs;
    const Rhs* rhs;
  };

  std::size_t at(std::size_t x, Dfa::State p, Dfa::State q) const { return (x * n_ + p) * n_ + q; }

  void solve() {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t r = 0; r < rules_.size(); ++r) {
        for (Dfa::State p = 0; p < n_; ++p) changed |= relax(r, p);
      }
    }
  }

  // One pass of the rule from state p; records strict improvements.
  bool relax(std::size_t r, Dfa::State p) {
    const Rhs& rhs = *rules_[r].rhs;
    const std::size_t k = rhs.size();
    std::vector<std::vector<std::uint64_t>> cost(k + 1, std::vector<std::uint64_t>(n_, kInf));
    std::vector<std::vector<Dfa::State>> pred(k + 1, std::vector<Dfa::State>(n_, SIZE_MAX));
    cost[0][p] = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const Symbol& s = rhs[i];
      for (Dfa::State a = 0; a < n_; ++a) {
        if (cost[i][a] == kInf) continue;
        if (s.is_terminal()) {
          const Dfa::State b = d_.next(a, s.letter());
          const std::uint64_t c = add_sat(cost[i][a], 1);
          if (c < cost[i + 1][b]) {
            cost[i + 1][b] = c;
            pred[i + 1][b] = a;
          }
          continue;
        }
        for (Dfa::State b = 0; b < n_; ++b) {
          const std::uint64_t c = add_sat(cost[i][a], dist_[at(s.index(), a, b)]);
          if (c < cost[i + 1][b]) {
            cost[i + 1][b] = c;
            pred[i + 1][b] = a;
          }
        }
      }
    }
    bool changed = false;
    const std::size_t x = rules_[r].lhs;
    for (Dfa::State q = 0; q < n_; ++q) {
      if (cost[k][q] >= dist_[at(x, p, q)]) continue;
      dist_[at(x, p, q)] = cost[k][q];
      Back b;
      b.rule = r;
      b.path.assign(k + 1, 0);
      b.path[k] = q;
      for (std::size_t i = k; i > 0; --i) b.path[i - 1] = pred[i][b.path[i]];
      back_[at(x, p, q)] = std::move(b);
      changed = true;
    }
    return changed;
  }

  void build(std::size_t x, Dfa::State p, Dfa::State q, Word& out, std::size_t depth) const {
    if (depth > dist_.size() + 1 || out.size() > kMaxWitnessLength) {
      throw Error("internal: witness reconstruction did not terminate");
    }
    const Back& b = back_[at(x, p, q)];
    const Rhs& rhs = *rules_[b.rule].rhs;
    for (std::size_t i = 0; i < rhs.size(); ++i) {
      if (rhs[i].is_terminal()) {
        out.push_back(rhs[i].letter());
      } else {
        build(rhs[i].index(), b.path[i], b.path[i + 1], out, depth + 1);
      }
    }
  }

  const Grammar& g_;
  const Dfa& d_;
  std::size_t n_;
  std::vector<Rule> rules_;
  std::vector<std::uint64_t> dist_;
  std::vector<Back> back_;
};

}  // namespace

std::optional<Word> shortest_word_in(const Grammar& g, const Dfa& d) {
  if (!g.alphabet().is_binary()) throw PreconditionError("shortest_word_in needs the alphabet 0 < 1");
  if (g.flags().epsilon_in_language && d.accepting(d.initial())) return Word{};
  if (g.size() == 0) return std::nullopt;
  TripleSolver solver(g, d);
  std::optional<Dfa::State> best;
  for (Dfa::State q = 0; q < d.size(); ++q) {
    if (!d.accepting(q)) continue;
    const std::uint64_t len = solver.dist(g.start(), d.initial(), q);
    if (len == kInf) continue;
    if (!best || len < solver.dist(g.start(), d.initial(), *best)) best = q;
  }
  if (!best) return std::nullopt;
  if (solver.dist(g.start(), d.initial(), *best) > kMaxWitnessLength) {
    throw Error("shortest witness exceeds the supported length");
  }
  return solver.word(g.start(), d.initial(), *best);
}

InclusionResult cfg_regular_inclusion(const Grammar& g, const Dfa& r) {
  InclusionResult result;
  result.counterexample = shortest_word_in(g, r.complement());
  result.holds = !result.counterexample;
  return result;
}

}  // namespace ordlex
