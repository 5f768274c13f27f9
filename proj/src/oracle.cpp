#include "ordlex/oracle.hpp"

#include <algorithm>
#include <set>

#include "ordlex/error.hpp"

namespace ordlex {

namespace {

constexpr std::size_t kMaxCap = 20;

// Words of exactly `len` letters derivable from the symbol sequence, given
// per-nonterminal word sets for lengths <= len.
std::set<Word> sequence_words(const Rhs& rhs, std::size_t len, const std::vector<std::vector<std::set<Word>>>& by_len) {
  std::vector<std::set<Word>> cur(len + 1);
  cur[0].insert(Word{});
  for (const Symbol& s : rhs) {
    std::vector<std::set<Word>> next(len + 1);
    for (std::size_t l = 0; l <= len; ++l) {
      if (cur[l].empty()) continue;
      if (s.is_terminal()) {
        if (l + 1 > len) continue;
        for (const auto& w : cur[l]) next[l + 1].insert(w + s.letter());
        continue;
      }
      for (std::size_t add = 0; l + add <= len; ++add) {
        const auto& tails = by_len[s.index()][add];
        if (tails.empty()) continue;
        for (const auto& w : cur[l]) {
          for (const auto& t : tails) next[l + add].insert(w + t);
        }
      }
    }
    cur = std::move(next);
  }
  return cur[len];
}

}  // namespace

EnumSample enumerate_words(const Grammar& g, std::size_t cap) {
  if (cap > kMaxCap) throw PreconditionError("enumeration length cap is at most 20");
  EnumSample sample;
  sample.length_cap = cap;
  if (g.size() == 0) return sample;
  std::vector<std::vector<std::set<Word>>> by_len(g.size(), std::vector<std::set<Word>>(cap + 1));
  for (std::size_t len = 0; len <= cap; ++len) {
    // Empty and unit rules make a length layer depend on itself.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t x = 0; x < g.size(); ++x) {
        for (const Rhs& rhs : g.rules(x)) {
          for (auto& w : sequence_words(rhs, len, by_len)) changed |= by_len[x][len].insert(std::move(w)).second;
        }
      }
    }
  }
  std::set<Word> all;
  for (const auto& layer : by_len[g.start()]) all.insert(layer.begin(), layer.end());
  if (g.flags().epsilon_in_language) all.insert(Word{});
  sample.words.assign(all.begin(), all.end());
  const OrderedAlphabet& a = g.alphabet();
  std::sort(sample.words.begin(), sample.words.end(),
            [&a](const Word& u, const Word& v) { return lex_less(u, v, a); });
  return sample;
}

Membership::Membership(const Grammar& g) : g_(&g), nullable_(nullable_nonterminals(g)) {}

bool Membership::contains(std::string_view w) {
  if (g_->size() == 0) return false;
  if (w.empty() && g_->flags().epsilon_in_language) return true;
  std::string key(w);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const std::size_t n = w.size(), k = g_->size();
  // derives[(i * (n + 1) + j) * k + x]: X derives w[i, j).
  std::vector<char> derives((n + 1) * (n + 1) * k, 0);
  auto at = [&](std::size_t i, std::size_t j, std::size_t x) -> char& { return derives[(i * (n + 1) + j) * k + x]; };
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t x = 0; x < k; ++x) at(i, i, x) = nullable_[x] ? 1 : 0;
  }
  std::vector<char> reach(n + 1);
  for (std::size_t span = 1; span <= n; ++span) {
    for (std::size_t i = 0; i + span <= n; ++i) {
      const std::size_t j = i + span;
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t x = 0; x < k; ++x) {
          if (at(i, j, x)) continue;
          for (const Rhs& rhs : g_->rules(x)) {
            std::fill(reach.begin(), reach.end(), 0);
            reach[i] = 1;
            for (const Symbol& s : rhs) {
              std::vector<char> next(n + 1, 0);
              for (std::size_t p = i; p <= j; ++p) {
                if (!reach[p]) continue;
                if (s.is_terminal()) {
                  if (p < j && w[p] == s.letter()) next[p + 1] = 1;
                  continue;
                }
                for (std::size_t q = p; q <= j; ++q) {
                  if (at(p, q, s.index())) next[q] = 1;
                }
              }
              reach = std::move(next);
            }
            if (reach[j]) {
              at(i, j, x) = 1;
              changed = true;
              break;
            }
          }
        }
      }
    }
  }
  const bool result = at(0, n, g_->start()) != 0;
  cache_.emplace(std::move(key), result);
  return result;
}

Word DescendingEvidence::member(std::size_t i) const {
  Word out = x;
  for (std::size_t k = 0; k < i; ++k) out += v;
  out += y;
  for (std::size_t k = 0; k < i; ++k) out += z;
  return out + w;
}

namespace {

bool pumps(Membership& m, const DescendingEvidence& e, std::size_t pump_checks) {
  for (std::size_t i = 0; i <= pump_checks; ++i) {
    if (!m.contains(e.member(i))) return false;
  }
  return true;
}

}  // namespace

std::optional<DescendingEvidence> find_descending_evidence(const Grammar& g, const EnumSample& sample,
                                                           std::size_t pump_checks) {
  Membership m(g);
  const OrderedAlphabet& a = g.alphabet();
  std::vector<Word> words = sample.words;
  std::stable_sort(words.begin(), words.end(), [](const Word& u, const Word& v) { return u.size() < v.size(); });

  for (const Word& s : words) {
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        DescendingEvidence e{s.substr(0, i), s.substr(i, j - i), "", "", s.substr(j)};
        if (strictly_less(e.v + e.w, e.w, a) && pumps(m, e, pump_checks)) return e;
      }
    }
  }
  // Paired pumping, needed for languages such as 0^n 1 0^n.
  for (const Word& s : words) {
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          for (std::size_t l = k + 1; l <= n; ++l) {
            DescendingEvidence e{s.substr(0, i), s.substr(i, j - i), s.substr(j, k - j), s.substr(k, l - k),
                                 s.substr(l)};
            if (strictly_less(e.v + e.y, e.y, a) && pumps(m, e, pump_checks)) return e;
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool ConsistencyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

ConsistencyReport cross_validate(const Grammar& g, const ValidationInputs& in) {
  ConsistencyReport report;
  Membership member(g);
  std::optional<RegularRank> exact;
  if (in.dfa) exact = regular_scattered_rank(*in.dfa);

  if (in.dfa && in.scatter) {
    CheckResult c{"scattered_vs_regular", true, "", {}};
    c.passed = exact->scattered == in.scatter->scattered;
    c.detail = std::string("grammar check says ") + (in.scatter->scattered ? "scattered" : "not scattered") +
               ", automaton says " + (exact->scattered ? "scattered" : "not scattered");
    if (exact->witness) {
      const DenseWitness& dw = *exact->witness;
      const bool loops = in.dfa->run(dw.state, dw.x) == dw.state && in.dfa->run(dw.state, dw.y) == dw.state;
      c.passed = c.passed && loops && strictly_less(dw.x, dw.y);
      c.witnesses = {dw.access, dw.x, dw.y};
    }
    report.checks.push_back(std::move(c));
  }

  std::optional<WellOrderResult> wo;
  if (in.dfa) wo = regular_well_ordered(*in.dfa);

  if (in.dfa && wo->well_ordered) {
    CheckResult c{"order_type_vs_enumeration", true, "", {}};
    const Ordinal type = regular_order_type(*in.dfa);
    const auto first = dfa_lex_first(*in.dfa, in.initial_segment);
    for (std::size_t i = 0; i < first.size() && c.passed; ++i) {
      const Dfa below = intersect(*in.dfa, Dfa::lex_below(first[i]));
      const Dfa rest = intersect(*in.dfa, Dfa::lex_below(first[i]).complement());
      if (regular_order_type(below) != Ordinal::finite(i) || Ordinal::finite(i) + regular_order_type(rest) != type ||
          !member.contains(first[i])) {
        c.passed = false;
        c.witnesses.push_back(first[i]);
        c.detail = "position " + std::to_string(i) + " disagrees with the order type " + to_string(type);
      }
    }
    if (c.passed && in.expected_type && *in.expected_type != type) {
      c.passed = false;
      c.detail = "order type " + to_string(type) + " differs from the requested " + to_string(*in.expected_type);
    }
    if (c.passed) {
      c.detail = "order type " + to_string(type) + " matches the first " + std::to_string(first.size()) + " words";
    }
    report.checks.push_back(std::move(c));
  }

  if (in.certificate) {
    CheckResult c{"certificate_vs_enumeration", true, "", {}};
    const auto from_cert = cert_words_up_to(*in.certificate, in.max_length);
    const auto from_grammar = enumerate_words(g, in.max_length).words;
    if (!certificate_consistent(*in.certificate)) {
      c.passed = false;
      c.detail = "certificate annotations are inconsistent";
    } else if (in.expected_type && in.certificate->type != *in.expected_type) {
      c.passed = false;
      c.detail = "certificate type " + to_string(in.certificate->type) + " differs from the requested " +
                 to_string(*in.expected_type);
    } else if (from_cert != from_grammar) {
      c.passed = false;
      std::vector<Word> diff;
      std::set_symmetric_difference(from_cert.begin(), from_cert.end(), from_grammar.begin(), from_grammar.end(),
                                    std::back_inserter(diff), [](const Word& u, const Word& v) { return lex_less(u, v); });
      if (!diff.empty()) c.witnesses.push_back(diff.front());
      c.detail = "certificate and grammar disagree on words up to length " + std::to_string(in.max_length);
    } else {
      for (const Word& w : cert_enumerate(*in.certificate, in.initial_segment)) {
        if (!member.contains(w)) {
          c.passed = false;
          c.witnesses.push_back(w);
          c.detail = "certificate word outside the grammar's language";
          break;
        }
      }
      if (c.passed) {
        c.detail = std::to_string(from_cert.size()) + " words up to length " + std::to_string(in.max_length) +
                   " agree";
      }
    }
    report.checks.push_back(std::move(c));
  }

  if (in.dfa && in.bound && exact->scattered) {
    CheckResult c{"rank_bound_vs_exact", true, "", {}};
    c.passed = exact->rank <= in.bound->overall;
    c.detail = "exact rank " + to_string(exact->rank) + ", bound " + to_string(in.bound->overall);
    report.checks.push_back(std::move(c));
  }

  if (in.dfa && !wo->well_ordered) {
    CheckResult c{"descent_vs_membership", true, "", {}};
    const DescentWitness& d = *wo->descent;
    c.witnesses = {d.u, d.v, d.w};
    c.passed = strictly_less(d.v + d.w, d.w);
    Word pumped = d.u;
    for (std::size_t i = 0; i <= in.pump_checks && c.passed; ++i, pumped += d.v) {
      c.passed = member.contains(pumped + d.w);
    }
    c.detail = c.passed ? "descending chain u v^i w verified for i <= " + std::to_string(in.pump_checks)
                        : "descending triple failed verification";
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace ordlex
