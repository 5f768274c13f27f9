#include "ordlex/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "ordlex/error.hpp"

namespace ordlex {

Grammar::Grammar(OrderedAlphabet alphabet) : alphabet_(std::move(alphabet)) {}

std::size_t Grammar::add_nonterminal(std::string name) {
  if (find(name)) throw PreconditionError("duplicate nonterminal " + name);
  names_.push_back(std::move(name));
  rules_.emplace_back();
  return names_.size() - 1;
}

std::size_t Grammar::intern(const std::string& name) {
  if (auto nt = find(name)) return *nt;
  return add_nonterminal(name);
}

std::optional<std::size_t> Grammar::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Grammar::rule_count() const {
  std::size_t n = 0;
  for (const auto& r : rules_) n += r.size();
  return n;
}

void Grammar::add_rule(std::size_t lhs, Rhs rhs) {
  if (lhs >= names_.size()) throw PreconditionError("rule for undeclared nonterminal");
  for (const Symbol& s : rhs) {
    if (s.is_terminal() && !alphabet_.contains(s.letter())) {
      throw PreconditionError(std::string("terminal '") + s.letter() + "' is not in the alphabet");
    }
    if (!s.is_terminal() && s.index() >= names_.size()) {
      throw PreconditionError("undeclared nonterminal in rule for " + names_[lhs]);
    }
  }
  auto& list = rules_[lhs];
  if (std::find(list.begin(), list.end(), rhs) == list.end()) list.push_back(std::move(rhs));
}

void Grammar::set_rules(std::size_t lhs, std::vector<Rhs> rhss) {
  rules_.at(lhs).clear();
  for (auto& r : rhss) add_rule(lhs, std::move(r));
}

void Grammar::set_start(std::size_t nt) {
  if (nt >= names_.size()) throw PreconditionError("start symbol out of range");
  start_ = nt;
}

std::string Grammar::fresh_name() const {
  for (std::size_t k = 1;; ++k) {
    std::string candidate = "_G" + std::to_string(k);
    if (!find(candidate)) return candidate;
  }
}

namespace {

constexpr std::string_view kEpsilonToken = "_eps";
constexpr std::string_view kTerminalsHeader = "terminals:";

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

bool is_nonterminal_token(std::string_view tok) {
  if (tok.empty() || tok == kEpsilonToken) return false;
  return std::isupper(static_cast<unsigned char>(tok[0])) || tok[0] == '_';
}

bool is_identifier(std::string_view tok) {
  return std::all_of(tok.begin(), tok.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

[[noreturn]] void syntax_error(std::size_t line, const std::string& msg) {
  throw ParseError("grammar line " + std::to_string(line) + ": " + msg, line);
}

struct RawRule {
  std::size_t line;
  std::string lhs;
  std::vector<std::vector<std::string>> alternatives;
};

}  // namespace

Grammar parse_grammar(std::string_view text) {
  std::string letters = "01";
  std::vector<RawRule> raw;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  bool seen_rule = false;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::string body = trim(line);
    if (!body.empty() && body[0] == '#') {
      std::string rest = trim(std::string_view(body).substr(1));
      if (rest.rfind(kTerminalsHeader, 0) == 0) {
        if (seen_rule) syntax_error(line_no, "terminals header must precede the rules");
        letters.clear();
        auto decl = trim(std::string_view(rest).substr(kTerminalsHeader.size()));
        std::string token;
        std::istringstream parts(decl);
        bool expect_letter = true;
        for (std::string tok; parts >> tok;) {
          if (expect_letter) {
            if (tok.size() != 1 || std::isupper(static_cast<unsigned char>(tok[0])) || tok == "#" ||
                tok == "|" || tok == "_") {
              syntax_error(line_no, "terminal '" + tok + "' must be a single non-uppercase character");
            }
            letters += tok;
          } else if (tok != "<") {
            syntax_error(line_no, "expected '<' between terminals");
          }
          expect_letter = !expect_letter;
        }
        if (letters.empty() || expect_letter) syntax_error(line_no, "malformed terminals header");
      }
      continue;
    }
    if (auto hash = body.find('#'); hash != std::string::npos) body = trim(body.substr(0, hash));
    if (body.empty()) continue;
    auto arrow = body.find("->");
    if (arrow == std::string::npos) syntax_error(line_no, "expected '->'");
    RawRule rule{line_no, trim(body.substr(0, arrow)), {}};
    if (!is_nonterminal_token(rule.lhs) || !is_identifier(rule.lhs)) {
      syntax_error(line_no, "left side '" + rule.lhs + "' is not a nonterminal name");
    }
    std::string rhs = body.substr(arrow + 2);
    std::size_t from = 0;
    while (true) {
      auto bar = rhs.find('|', from);
      rule.alternatives.push_back(split_ws(rhs.substr(from, bar == std::string::npos ? std::string::npos : bar - from)));
      if (bar == std::string::npos) break;
      from = bar + 1;
    }
    seen_rule = true;
    raw.push_back(std::move(rule));
  }
  if (raw.empty()) throw ParseError("grammar has no rules", line_no);

  OrderedAlphabet alphabet = [&] {
    try {
      return OrderedAlphabet(letters);
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("grammar header: ") + e.what(), 1);
    }
  }();
  Grammar g(alphabet);
  for (const auto& r : raw) {
    if (g.find(r.lhs)) syntax_error(r.line, "duplicate rule block for " + r.lhs);
    g.add_nonterminal(r.lhs);
  }
  for (const auto& r : raw) {
    const std::size_t lhs = *g.find(r.lhs);
    for (const auto& alt : r.alternatives) {
      if (alt.empty()) syntax_error(r.line, "empty alternative (write _eps for the empty word)");
      Rhs rhs;
      if (alt.size() == 1 && alt[0] == kEpsilonToken) {
        g.add_rule(lhs, rhs);
        continue;
      }
      for (const auto& tok : alt) {
        if (tok == kEpsilonToken) syntax_error(r.line, "_eps must stand alone");
        if (is_nonterminal_token(tok)) {
          auto nt = g.find(tok);
          if (!nt) syntax_error(r.line, "undeclared nonterminal " + tok);
          rhs.push_back(Symbol::nonterminal(*nt));
        } else {
          if (tok.size() != 1) syntax_error(r.line, "terminal '" + tok + "' must be a single letter");
          if (!alphabet.contains(tok[0])) syntax_error(r.line, "terminal '" + tok + "' is not declared");
          rhs.push_back(Symbol::terminal(tok[0]));
        }
      }
      g.add_rule(lhs, std::move(rhs));
    }
  }
  g.set_start(0);
  return g;
}

std::string rhs_text(const Grammar& g, const Rhs& rhs) {
  if (rhs.empty()) return std::string(kEpsilonToken);
  std::string out;
  for (const Symbol& s : rhs) {
    if (!out.empty()) out += ' ';
    if (s.is_terminal()) {
      out += s.letter();
    } else {
      out += g.name(s.index());
    }
  }
  return out;
}

std::string to_text(const Grammar& g) {
  std::string out;
  if (!g.alphabet().is_binary()) {
    out += "# terminals:";
    for (std::size_t i = 0; i < g.alphabet().size(); ++i) {
      if (i > 0) out += " <";
      out += ' ';
      out += g.alphabet().letters()[i];
    }
    out += '\n';
  }
  std::vector<std::size_t> order{g.start()};
  for (std::size_t nt = 0; nt < g.size(); ++nt) {
    if (nt != g.start()) order.push_back(nt);
  }
  for (std::size_t nt : order) {
    if (g.rules(nt).empty()) continue;
    out += g.name(nt) + " ->";
    bool first = true;
    for (const auto& rhs : g.rules(nt)) {
      out += first ? " " : " | ";
      out += rhs_text(g, rhs);
      first = false;
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<bool> productive_nonterminals(const Grammar& g) {
  std::vector<bool> productive(g.size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t nt = 0; nt < g.size(); ++nt) {
      if (productive[nt]) continue;
      for (const auto& rhs : g.rules(nt)) {
        if (std::all_of(rhs.begin(), rhs.end(), [&](const Symbol& s) {
              return s.is_terminal() || productive[s.index()];
            })) {
          productive[nt] = changed = true;
          break;
        }
      }
    }
  }
  return productive;
}

}  // namespace

std::optional<Grammar> reduce_grammar(const Grammar& g) {
  const auto productive = productive_nonterminals(g);
  if (!productive[g.start()]) return std::nullopt;

  auto usable = [&](const Rhs& rhs) {
    return std::all_of(rhs.begin(), rhs.end(),
                       [&](const Symbol& s) { return s.is_terminal() || productive[s.index()]; });
  };
  std::vector<bool> reachable(g.size(), false);
  std::vector<std::size_t> stack{g.start()};
  reachable[g.start()] = true;
  while (!stack.empty()) {
    std::size_t nt = stack.back();
    stack.pop_back();
    for (const auto& rhs : g.rules(nt)) {
      if (!usable(rhs)) continue;
      for (const Symbol& s : rhs) {
        if (!s.is_terminal() && !reachable[s.index()]) {
          reachable[s.index()] = true;
          stack.push_back(s.index());
        }
      }
    }
  }

  Grammar out(g.alphabet());
  std::vector<std::size_t> remap(g.size(), SIZE_MAX);
  for (std::size_t nt = 0; nt < g.size(); ++nt) {
    if (reachable[nt]) remap[nt] = out.add_nonterminal(g.name(nt));
  }
  for (std::size_t nt = 0; nt < g.size(); ++nt) {
    if (!reachable[nt]) continue;
    for (const auto& rhs : g.rules(nt)) {
      if (!usable(rhs)) continue;
      Rhs mapped;
      for (const Symbol& s : rhs) {
        mapped.push_back(s.is_terminal() ? s : Symbol::nonterminal(remap[s.index()]));
      }
      out.add_rule(remap[nt], std::move(mapped));
    }
  }
  out.set_start(remap[g.start()]);
  out.flags() = g.flags();
  out.flags().reduced = true;
  return out;
}

Grammar encode_binary(const Grammar& g) {
  if (g.alphabet().is_binary()) return g;
  const BinaryEncoding code = binary_encode(g.alphabet());
  Grammar out(OrderedAlphabet::binary());
  for (std::size_t nt = 0; nt < g.size(); ++nt) out.add_nonterminal(g.name(nt));
  for (std::size_t nt = 0; nt < g.size(); ++nt) {
    for (const auto& rhs : g.rules(nt)) {
      Rhs mapped;
      for (const Symbol& s : rhs) {
        if (!s.is_terminal()) {
          mapped.push_back(s);
          continue;
        }
        for (char bit : code.codeword(s.letter())) mapped.push_back(Symbol::terminal(bit));
      }
      out.add_rule(nt, std::move(mapped));
    }
  }
  out.set_start(g.start());
  out.flags() = g.flags();
  out.flags().gnf = out.flags().gnf && code.width() == 1;
  return out;
}

std::vector<bool> nullable_nonterminals(const Grammar& g) {
  std::vector<bool> nullable(g.size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t nt = 0; nt < g.size(); ++nt) {
      if (nullable[nt]) continue;
      for (const auto& rhs : g.rules(nt)) {
        if (std::all_of(rhs.begin(), rhs.end(), [&](const Symbol& s) {
              return !s.is_terminal() && nullable[s.index()];
            })) {
          nullable[nt] = changed = true;
          break;
        }
      }
    }
  }
  return nullable;
}

bool is_gnf(const Grammar& g) {
  for (std::size_t nt = 0; nt < g.size(); ++nt) {
    for (const auto& rhs : g.rules(nt)) {
      if (rhs.empty() || !rhs[0].is_terminal()) return false;
      for (std::size_t i = 1; i < rhs.size(); ++i) {
        if (rhs[i].is_terminal()) return false;
      }
    }
  }
  return true;
}

bool is_right_linear(const Grammar& g) {
  for (std::size_t nt = 0; nt < g.size(); ++nt) {
    for (const auto& rhs : g.rules(nt)) {
      for (std::size_t i = 0; i + 1 < rhs.size(); ++i) {
        if (!rhs[i].is_terminal()) return false;
      }
    }
  }
  return true;
}

StructureReport structure(const Grammar& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t nt = 0; nt < n; ++nt) {
    for (const auto& rhs : g.rules(nt)) {
      for (const Symbol& s : rhs) {
        if (!s.is_terminal()) succ[nt].push_back(s.index());
      }
    }
    std::sort(succ[nt].begin(), succ[nt].end());
    succ[nt].erase(std::unique(succ[nt].begin(), succ[nt].end()), succ[nt].end());
  }

  // Tarjan's strongly connected components.
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  int counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : succ[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }
  std::sort(comps.begin(), comps.end());

  StructureReport report;
  report.components = comps;
  report.component_of.assign(n, 0);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (std::size_t v : comps[c]) report.component_of[v] = c;
  }
  const std::size_t k = comps.size();
  std::vector<std::vector<std::size_t>> csucc(k);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w : succ[v]) {
      std::size_t a = report.component_of[v], b = report.component_of[w];
      if (a != b) csucc[a].push_back(b);
    }
  }
  report.reaches.assign(k, std::vector<bool>(k, false));
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::size_t> todo{c};
    report.reaches[c][c] = true;
    while (!todo.empty()) {
      std::size_t x = todo.back();
      todo.pop_back();
      for (std::size_t y : csucc[x]) {
        if (!report.reaches[c][y]) {
          report.reaches[c][y] = true;
          todo.push_back(y);
        }
      }
    }
  }
  report.height.assign(k, 0);
  std::vector<bool> done(k, false);
  std::function<std::size_t(std::size_t)> height = [&](std::size_t c) -> std::size_t {
    if (done[c]) return report.height[c];
    std::size_t h = 0;
    for (std::size_t d : csucc[c]) h = std::max(h, height(d) + 1);
    done[c] = true;
    return report.height[c] = h;
  };
  for (std::size_t c = 0; c < k; ++c) height(c);

  report.recursive.assign(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& comp = comps[report.component_of[v]];
    bool self_loop = std::binary_search(succ[v].begin(), succ[v].end(), v);
    report.recursive[v] = comp.size() > 1 || self_loop;
  }
  return report;
}

}  // namespace ordlex
