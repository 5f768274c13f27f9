#include "ordlex/synth.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <json.hpp>

#include "ordlex/error.hpp"

namespace ordlex {

namespace {

std::shared_ptr<Certificate> node(Certificate::Kind kind) {
  auto c = std::make_shared<Certificate>();
  c->kind = kind;
  return c;
}

}  // namespace

CertPtr cert_fin(std::uint64_t n) {
  if (n == 0) throw PreconditionError("Fin needs at least one word");
  auto c = node(Certificate::Kind::Fin);
  c->n = n;
  c->type = Ordinal::finite(n);
  return c;
}

CertPtr cert_omega() {
  auto c = node(Certificate::Kind::Omega);
  c->type = Ordinal::omega();
  return c;
}

CertPtr cert_sum(CertPtr a, CertPtr b) {
  auto c = node(Certificate::Kind::Sum);
  c->type = a->type + b->type;
  c->prefix_code = a->prefix_code && b->prefix_code;
  c->left = std::move(a);
  c->right = std::move(b);
  return c;
}

CertPtr cert_prod(CertPtr a, CertPtr b) {
  if (!a->prefix_code || !b->prefix_code) throw PreconditionError("Prod operands must be prefix codes");
  auto c = node(Certificate::Kind::Prod);
  c->type = b->type * a->type;  // one copy of L(b) per word of L(a)
  c->left = std::move(a);
  c->right = std::move(b);
  return c;
}

CertPtr cert_omega_iter(CertPtr a) {
  if (!a->prefix_code) throw PreconditionError("OmegaIter operand must be a prefix code");
  const auto& terms = a->type.terms();
  if (terms.size() != 1 || terms[0].coefficient != 1 || terms[0].exponent.is_zero()) {
    throw PreconditionError("OmegaIter operand must have type w^g with g >= 1");
  }
  auto c = node(Certificate::Kind::OmegaIter);
  c->type = omega_power(terms[0].exponent * Ordinal::omega());
  c->left = std::move(a);
  return c;
}

std::string kind_name(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::Fin:
      return "FIN";
    case Certificate::Kind::Omega:
      return "OMEGA";
    case Certificate::Kind::Sum:
      return "SUM";
    case Certificate::Kind::Prod:
      return "PROD";
    case Certificate::Kind::OmegaIter:
      return "OMEGA_ITER";
  }
  return "?";
}

CertPtr synth_certificate(const Ordinal& alpha) {
  if (alpha.is_zero()) throw PreconditionError("cannot synthesize the empty order type 0");
  for (const auto& term : alpha.terms()) {
    for (const auto& inner : term.exponent.terms()) {
      if (!inner.exponent.is_finite()) {
        throw PreconditionError("ordinal " + to_string(alpha) + " is not below the bound w^(w^w)");
      }
    }
  }
  // w^(w^k): k-fold OmegaIter over Omega, shared between uses.
  std::vector<CertPtr> towers{cert_omega()};
  auto tower = [&](std::uint64_t k) {
    while (towers.size() <= k) towers.push_back(cert_omega_iter(towers.back()));
    return towers[k];
  };
  // w^b as a product of towers, one per unit w^k of b, largest first.
  auto power = [&](const Ordinal& b) {
    CertPtr acc;
    for (const auto& unit : b.terms()) {
      const std::uint64_t k = unit.exponent.finite_value();
      for (std::uint64_t i = 0; i < unit.coefficient; ++i) acc = acc ? cert_prod(tower(k), acc) : tower(k);
    }
    return acc;
  };
  std::vector<CertPtr> pieces;
  for (const auto& term : alpha.terms()) {
    if (term.exponent.is_zero()) {
      pieces.push_back(cert_fin(term.coefficient));
    } else if (term.coefficient == 1) {
      pieces.push_back(power(term.exponent));
    } else {
      pieces.push_back(cert_prod(cert_fin(term.coefficient), power(term.exponent)));
    }
  }
  CertPtr root = pieces.back();
  for (std::size_t i = pieces.size() - 1; i-- > 0;) root = cert_sum(pieces[i], root);
  if (root->type != alpha) throw Error("internal: certificate type " + to_string(root->type) + " differs from request");
  return root;
}

Grammar certificate_grammar(const Certificate& c) {
  // gen(node, k) is a nonterminal for L(node) followed by L(k); k = -1 means
  // no continuation.
  constexpr long kNone = -1;
  std::vector<std::vector<Rhs>> rules;
  std::map<std::pair<const Certificate*, long>, std::size_t> memo;
  auto fresh = [&] {
    rules.emplace_back();
    return rules.size() - 1;
  };
  auto tail = [](Rhs r, long k) {
    if (k != kNone) r.push_back(Symbol::nonterminal(static_cast<std::size_t>(k)));
    return r;
  };
  const Symbol zero = Symbol::terminal('0'), one = Symbol::terminal('1');
  std::function<std::size_t(const Certificate&, long)> gen = [&](const Certificate& node, long k) -> std::size_t {
    if (auto it = memo.find({&node, k}); it != memo.end()) return it->second;
    std::size_t self = 0;
    switch (node.kind) {
      case Certificate::Kind::Fin: {
        std::vector<std::size_t> chain;
        for (std::uint64_t i = 0; i < node.n; ++i) chain.push_back(fresh());
        for (std::uint64_t i = 0; i < node.n; ++i) {
          rules[chain[i]].push_back(tail({zero}, k));
          if (i + 1 < node.n) rules[chain[i]].push_back({one, Symbol::nonterminal(chain[i + 1])});
        }
        self = chain[0];
        break;
      }
      case Certificate::Kind::Omega:
        self = fresh();
        rules[self].push_back({one, Symbol::nonterminal(self)});
        rules[self].push_back(tail({zero}, k));
        break;
      case Certificate::Kind::Sum: {
        self = fresh();
        const std::size_t a = gen(*node.left, k);
        const std::size_t b = gen(*node.right, k);
        rules[self].push_back({zero, Symbol::nonterminal(a)});
        rules[self].push_back({one, Symbol::nonterminal(b)});
        break;
      }
      case Certificate::Kind::Prod: {
        const std::size_t rest = gen(*node.right, k);
        self = gen(*node.left, static_cast<long>(rest));
        break;
      }
      case Certificate::Kind::OmegaIter: {
        // self -> 0 K | 1 T L K,  T -> 0 | 1 T L: the word 1^n 0 L^n K.
        self = fresh();
        const std::size_t t = fresh();
        const std::size_t l = gen(*node.left, kNone);
        rules[self].push_back(tail({zero}, k));
        rules[self].push_back(tail({one, Symbol::nonterminal(t), Symbol::nonterminal(l)}, k));
        rules[t].push_back({zero});
        rules[t].push_back({one, Symbol::nonterminal(t), Symbol::nonterminal(l)});
        break;
      }
    }
    memo[{&node, k}] = self;
    return self;
  };
  const std::size_t root = gen(c, kNone);

  std::vector<std::size_t> rename(rules.size());
  Grammar g;
  rename[root] = g.add_nonterminal("S");
  std::size_t counter = 0;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (i != root) rename[i] = g.add_nonterminal("N" + std::to_string(++counter));
  }
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (Rhs rhs : rules[i]) {
      for (Symbol& s : rhs) {
        if (!s.is_terminal()) s = Symbol::nonterminal(rename[s.index()]);
      }
      g.add_rule(rename[i], std::move(rhs));
    }
  }
  g.set_start(rename[root]);
  return g;
}

Synthesis synth_grammar(const Ordinal& alpha) {
  CertPtr cert = synth_certificate(alpha);
  return {certificate_grammar(*cert), cert};
}

namespace {

std::vector<Word> prefixed(const std::string& head, const std::vector<Word>& words) {
  std::vector<Word> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(head + w);
  return out;
}

std::vector<Word> first_words(const Certificate& c, std::size_t n) {
  std::vector<Word> out;
  if (n == 0) return out;
  switch (c.kind) {
    case Certificate::Kind::Fin:
    case Certificate::Kind::Omega: {
      const std::size_t count = c.kind == Certificate::Kind::Fin ? std::min<std::uint64_t>(n, c.n) : n;
      for (std::size_t i = 0; i < count; ++i) out.push_back(std::string(i, '1') + "0");
      return out;
    }
    case Certificate::Kind::Sum: {
      out = prefixed("0", first_words(*c.left, n));
      if (out.size() < n) {
        auto more = prefixed("1", first_words(*c.right, n - out.size()));
        out.insert(out.end(), more.begin(), more.end());
      }
      return out;
    }
    case Certificate::Kind::Prod: {
      if (!c.right->type.is_finite()) {
        for (const auto& u : first_words(*c.left, 1)) out = prefixed(u, first_words(*c.right, n));
        return out;
      }
      const std::size_t m = c.right->type.finite_value();
      const auto tails = first_words(*c.right, m);
      for (const auto& u : first_words(*c.left, (n + m - 1) / m)) {
        for (const auto& v : tails) {
          if (out.size() == n) return out;
          out.push_back(u + v);
        }
      }
      return out;
    }
    case Certificate::Kind::OmegaIter: {
      // "0" first, then the block 10 L, which is already infinite.
      out.push_back("0");
      auto more = prefixed("10", first_words(*c.left, n - 1));
      out.insert(out.end(), more.begin(), more.end());
      return out;
    }
  }
  return out;
}

std::vector<Word> words_up_to(const Certificate& c, std::size_t max_length) {
  std::vector<Word> out;
  switch (c.kind) {
    case Certificate::Kind::Fin:
    case Certificate::Kind::Omega: {
      for (std::size_t i = 0; i + 1 <= max_length; ++i) {
        if (c.kind == Certificate::Kind::Fin && i >= c.n) break;
        out.push_back(std::string(i, '1') + "0");
      }
      break;
    }
    case Certificate::Kind::Sum:
      if (max_length == 0) break;
      out = prefixed("0", words_up_to(*c.left, max_length - 1));
      for (auto& w : prefixed("1", words_up_to(*c.right, max_length - 1))) out.push_back(std::move(w));
      break;
    case Certificate::Kind::Prod:
      for (const auto& u : words_up_to(*c.left, max_length)) {
        for (auto& w : prefixed(u, words_up_to(*c.right, max_length - u.size()))) out.push_back(std::move(w));
      }
      break;
    case Certificate::Kind::OmegaIter: {
      // Powers L^k restricted to the remaining length, built incrementally.
      std::vector<Word> power{Word{}};
      const auto base = words_up_to(*c.left, max_length);
      for (std::size_t k = 0; k + 1 <= max_length && !power.empty(); ++k) {
        const std::string head = std::string(k, '1') + "0";
        for (const auto& w : power) {
          if (head.size() + w.size() <= max_length) out.push_back(head + w);
        }
        std::vector<Word> next;
        for (const auto& w : power) {
          for (const auto& b : base) {
            if (head.size() + 1 + w.size() + b.size() <= max_length) next.push_back(w + b);
          }
        }
        power = std::move(next);
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return lex_less(a, b); });
  return out;
}

bool is_prefix_code(const Certificate& c) {
  switch (c.kind) {
    case Certificate::Kind::Fin:
    case Certificate::Kind::Omega:
      return true;
    case Certificate::Kind::Sum:
    case Certificate::Kind::Prod:
      return is_prefix_code(*c.left) && is_prefix_code(*c.right);
    case Certificate::Kind::OmegaIter:
      return is_prefix_code(*c.left);
  }
  return false;
}

}  // namespace

std::vector<Word> cert_enumerate(const Certificate& c, std::size_t n) {
  if (n > 100000) throw PreconditionError("cert_enumerate is capped at 10^5 words");
  return first_words(c, n);
}

std::vector<Word> cert_words_up_to(const Certificate& c, std::size_t max_length) {
  return words_up_to(c, max_length);
}

bool certificate_consistent(const Certificate& c) {
  CertPtr rebuilt;
  try {
    switch (c.kind) {
      case Certificate::Kind::Fin:
        rebuilt = cert_fin(c.n);
        break;
      case Certificate::Kind::Omega:
        rebuilt = cert_omega();
        break;
      case Certificate::Kind::Sum:
        if (!c.left || !c.right || !certificate_consistent(*c.left) || !certificate_consistent(*c.right)) return false;
        rebuilt = cert_sum(c.left, c.right);
        break;
      case Certificate::Kind::Prod:
        if (!c.left || !c.right || !certificate_consistent(*c.left) || !certificate_consistent(*c.right)) return false;
        rebuilt = cert_prod(c.left, c.right);
        break;
      case Certificate::Kind::OmegaIter:
        if (!c.left || !certificate_consistent(*c.left)) return false;
        rebuilt = cert_omega_iter(c.left);
        break;
    }
  } catch (const PreconditionError&) {
    return false;
  }
  return rebuilt->type == c.type && c.prefix_code == is_prefix_code(c);
}

namespace {

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j;
  j["kind"] = kind_name(c.kind);
  j["type"] = to_string(c.type);
  j["prefix_code"] = c.prefix_code;
  if (c.kind == Certificate::Kind::Fin) j["n"] = c.n;
  if (c.left) {
    j["children"].push_back(to_json(*c.left));
    if (c.right) j["children"].push_back(to_json(*c.right));
  }
  return j;
}

CertPtr from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const auto& kids = j.contains("children") ? j.at("children") : nlohmann::json::array();
  auto child = [&](std::size_t i) {
    if (kids.size() <= i) throw PreconditionError("certificate node " + kind + " is missing an operand");
    return from_json(kids.at(i));
  };
  CertPtr c;
  if (kind == "FIN") {
    c = cert_fin(j.at("n").get<std::uint64_t>());
  } else if (kind == "OMEGA") {
    c = cert_omega();
  } else if (kind == "SUM") {
    c = cert_sum(child(0), child(1));
  } else if (kind == "PROD") {
    c = cert_prod(child(0), child(1));
  } else if (kind == "OMEGA_ITER") {
    c = cert_omega_iter(child(0));
  } else {
    throw ParseError("unknown certificate node " + kind, 0);
  }
  if (c->type != parse_ordinal(j.at("type").get<std::string>())) {
    throw PreconditionError("certificate node " + kind + " claims type " + j.at("type").get<std::string>() +
                            " but its operands give " + to_string(c->type));
  }
  return c;
}

}  // namespace

std::string certificate_to_json(const Certificate& c) { return to_json(c).dump(2); }

CertPtr certificate_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("certificate JSON: ") + e.what(), e.byte);
  }
  try {
    return from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("certificate JSON: ") + e.what());
  }
}

}  // namespace ordlex
