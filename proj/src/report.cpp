#include "ordlex/report.hpp"

#include <sstream>

#include "ordlex/error.hpp"

namespace ordlex {

bool Analysis::scattered() const { return !scatter || scatter->scattered; }

namespace {

void add_expected_type_check(Analysis& a, const AnalysisOptions& options) {
  if (!options.expected_type) return;
  const Ordinal& want = *options.expected_type;
  CheckResult c{"expected_order_type", true, "", {}};
  bool cert_ok = false;
  for (const auto& check : a.consistency.checks) {
    if (check.name == "certificate_vs_enumeration") cert_ok = check.passed;
  }
  if (a.order_type) {
    c.passed = *a.order_type == want;
    c.detail = "exact order type " + to_string(*a.order_type) + (c.passed ? " equals " : " differs from ") +
               to_string(want);
  } else if (options.certificate) {
    c.passed = cert_ok && options.certificate->type == want;
    c.detail = c.passed ? "certificate of type " + to_string(want) + " agrees with the grammar"
                        : "certificate does not establish order type " + to_string(want);
  } else if (a.well_order && !a.well_order->well_ordered) {
    c.passed = false;
    c.detail = "language is not well-ordered";
  } else {
    c.passed = false;
    c.detail = "order type cannot be verified: the grammar is not right-linear and no certificate was given";
  }
  a.consistency.checks.push_back(std::move(c));
}

}  // namespace

Analysis analyze_grammar(const Grammar& g, const AnalysisOptions& options, std::string source) {
  Analysis a;
  a.source = std::move(source);
  a.original = g;
  Grammar encoded = encode_binary(g);
  if (!g.alphabet().is_binary()) a.transforms.push_back("binary_encode");

  auto reduced = reduce_grammar(encoded);
  a.transforms.push_back("reduce");
  if (!reduced) {
    a.empty_language = true;
    a.binary = encoded;
    a.dfa = Dfa::empty();
  } else {
    a.binary = *reduced;
    GnfResult gnf = to_gnf(*reduced);
    a.transforms.push_back("gnf");
    a.epsilon_in_language = gnf.epsilon_in_language;
    a.gnf = std::move(gnf.grammar);
    if (!a.gnf) {
      // L = {eps}.
      a.dfa = Dfa::from_words({Word{}});
    } else {
      a.structure = structure(*a.gnf);
      a.scatter = check_scattered_cfg(*a.gnf);
      if (a.scatter->scattered) a.bound = rank_bound_cfg(*a.gnf, *a.structure, *a.scatter);
      if (is_right_linear(a.binary)) {
        a.dfa = right_linear_to_dfa(a.binary);
      } else if (is_right_linear(*a.gnf)) {
        a.dfa = right_linear_to_dfa(*a.gnf);
      }
    }
  }

  if (a.dfa) {
    a.transforms.push_back("dfa");
    a.exact_rank = regular_scattered_rank(*a.dfa);
    a.well_order = regular_well_ordered(*a.dfa);
    if (a.well_order->well_ordered) a.order_type = regular_order_type(*a.dfa);
  } else if (!a.empty_language) {
    a.evidence = find_descending_evidence(a.binary, enumerate_words(a.binary, options.enum_cap), options.pump_checks);
  }

  ValidationInputs in;
  in.scatter = a.scatter ? &*a.scatter : nullptr;
  in.bound = a.bound ? &*a.bound : nullptr;
  in.dfa = a.dfa ? &*a.dfa : nullptr;
  in.certificate = options.certificate;
  in.expected_type = options.expected_type;
  in.max_length = options.max_length;
  in.pump_checks = options.pump_checks;
  a.consistency = cross_validate(a.binary, in);
  add_expected_type_check(a, options);
  return a;
}

namespace {

using nlohmann::json;

json names_of(const Grammar& g, const std::vector<std::size_t>& nts) {
  json out = json::array();
  for (std::size_t x : nts) out.push_back(g.name(x));
  return out;
}

json dfa_json(const Dfa& d) {
  json edges = json::array(), accepting = json::array();
  for (Dfa::State q = 0; q < d.size(); ++q) {
    edges.push_back({d.next(q, 0), d.next(q, 1)});
    if (d.accepting(q)) accepting.push_back(q);
  }
  return {{"states", d.size()}, {"initial", d.initial()}, {"accepting", accepting}, {"edges", edges}};
}

json scatter_json(const Analysis& a) {
  json out;
  out["label"] = "exact";
  if (!a.scatter) {
    // Empty language or {eps}: trivially scattered.
    out["value"] = true;
    out["certificates"] = json::array();
    return out;
  }
  const Grammar& g = *a.gnf;
  out["value"] = a.scatter->scattered;
  json certs = json::array();
  for (const auto& c : a.scatter->certificates) {
    json pairs = json::array();
    for (const auto& [xy, p] : c.pairs) {
      pairs.push_back({{"x", g.name(xy.first)}, {"y", g.name(xy.second)}, {"v0", p.v0}, {"v1", p.v1}});
    }
    certs.push_back({{"component", names_of(g, c.component)},
                     {"u0", c.u0},
                     {"conjugacy_consistent", c.conjugacy_consistent},
                     {"pairs", pairs}});
  }
  out["certificates"] = certs;
  if (a.scatter->failure) {
    const ScatterFailure& f = *a.scatter->failure;
    json candidates = json::array();
    for (const auto& c : f.candidates) {
      candidates.push_back({{"v0", c.candidate.v0}, {"v1", c.candidate.v1}, {"counterexample", c.counterexample}});
    }
    out["failure"] = {{"component", names_of(g, f.component)},
                      {"x", g.name(f.x)},
                      {"y", g.name(f.y)},
                      {"u0", f.u0},
                      {"counterexample", f.counterexample},
                      {"candidates", candidates}};
  }
  return out;
}

json rank_json(const Analysis& a) {
  if (!a.scattered()) return nullptr;
  json out;
  if (a.bound) {
    out["bound"] = to_string(a.bound->overall);
    json per = json::object();
    for (std::size_t x = 0; x < a.gnf->size(); ++x) per[a.gnf->name(x)] = to_string(a.bound->per_nonterminal[x]);
    out["per_nonterminal"] = per;
  }
  if (a.exact_rank && a.exact_rank->scattered) {
    out["label"] = "exact";
    out["value"] = to_string(a.exact_rank->rank);
  } else {
    out["label"] = "upper-bound";
    out["value"] = a.bound ? json(to_string(a.bound->overall)) : json(nullptr);
  }
  return out;
}

json well_order_json(const Analysis& a) {
  json out;
  if (a.well_order) {
    out["label"] = "exact";
    out["value"] = a.well_order->well_ordered;
    if (a.well_order->descent) {
      const auto& d = *a.well_order->descent;
      out["descent"] = {{"u", d.u}, {"v", d.v}, {"w", d.w}};
    }
    return out;
  }
  out["label"] = "evidence";
  if (a.evidence) {
    out["value"] = false;
    const auto& e = *a.evidence;
    out["descent"] = {{"x", e.x}, {"v", e.v}, {"y", e.y}, {"z", e.z}, {"w", e.w}};
  } else {
    out["value"] = nullptr;  // no descending evidence within the sample
  }
  return out;
}

}  // namespace

json analysis_json(const Analysis& a) {
  json out;
  out["schema"] = 1;
  out["source"] = a.source;
  out["grammar"] = to_text(a.original);
  out["transforms"] = a.transforms;
  out["empty_language"] = a.empty_language;
  out["epsilon_in_language"] = a.epsilon_in_language;
  if (a.gnf) out["gnf"] = to_text(*a.gnf);
  if (a.structure) {
    json comps = json::array();
    for (std::size_t c = 0; c < a.structure->components.size(); ++c) {
      const auto& members = a.structure->components[c];
      comps.push_back({{"members", names_of(*a.gnf, members)},
                       {"height", a.structure->height[c]},
                       {"recursive", static_cast<bool>(a.structure->recursive[members.front()])}});
    }
    out["structure"] = {{"components", comps}};
  }
  out["scattered"] = scatter_json(a);
  out["rank"] = rank_json(a);
  out["well_ordered"] = well_order_json(a);
  out["order_type"] = a.order_type ? json{{"label", "exact"}, {"value", to_string(*a.order_type)}} : json(nullptr);
  if (a.dfa) out["dfa"] = dfa_json(*a.dfa);
  json checks = json::array();
  for (const auto& c : a.consistency.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"witnesses", c.witnesses}});
  }
  out["consistency"] = checks;
  out["all_checks_passed"] = a.consistency.all_passed();
  return out;
}

namespace {

std::string show_word(const Word& w) { return w.empty() ? "<eps>" : w; }

}  // namespace

std::string analysis_text(const Analysis& a) {
  std::ostringstream os;
  if (!a.source.empty()) os << "== " << a.source << "\n";
  os << "transforms: ";
  for (std::size_t i = 0; i < a.transforms.size(); ++i) os << (i ? " -> " : "") << a.transforms[i];
  os << "\n";
  if (a.empty_language) os << "language: empty\n";
  if (a.epsilon_in_language) os << "language contains the empty word\n";
  if (a.structure) {
    os << "components:\n";
    for (std::size_t c = 0; c < a.structure->components.size(); ++c) {
      const auto& members = a.structure->components[c];
      os << "  {";
      for (std::size_t i = 0; i < members.size(); ++i) os << (i ? ", " : "") << a.gnf->name(members[i]);
      os << "} height " << a.structure->height[c] << (a.structure->recursive[members.front()] ? " recursive" : "")
         << "\n";
    }
  }
  os << "scattered: " << (a.scattered() ? "yes" : "no") << " (exact)\n";
  if (a.scatter) {
    for (const auto& c : a.scatter->certificates) {
      os << "  component {";
      for (std::size_t i = 0; i < c.component.size(); ++i) os << (i ? ", " : "") << a.gnf->name(c.component[i]);
      os << "} u0 = " << c.u0 << (c.conjugacy_consistent ? "" : " (members pump non-conjugate words)") << "\n";
    }
    if (a.scatter->failure) {
      const auto& f = *a.scatter->failure;
      os << "  failure at (" << a.gnf->name(f.x) << ", " << a.gnf->name(f.y) << "), u0 = " << f.u0
         << ", prefix " << show_word(f.counterexample) << " fits no v0* v1\n";
    }
  }
  if (a.scattered()) {
    if (a.exact_rank && a.exact_rank->scattered) os << "rank: " << to_string(a.exact_rank->rank) << " (exact)\n";
    if (a.bound) os << "rank bound: " << to_string(a.bound->overall) << " (upper-bound)\n";
  }
  if (a.well_order) {
    os << "well-ordered: " << (a.well_order->well_ordered ? "yes" : "no") << " (exact)";
    if (a.well_order->descent) {
      const auto& d = *a.well_order->descent;
      os << ", descending chain " << show_word(d.u) << " (" << d.v << ")^n " << d.w;
    }
    os << "\n";
  } else if (a.evidence) {
    const auto& e = *a.evidence;
    os << "well-ordered: no (evidence), pumped family x=" << show_word(e.x) << " v=" << e.v << " y=" << show_word(e.y)
       << " z=" << show_word(e.z) << " w=" << show_word(e.w) << "\n";
  } else if (!a.empty_language) {
    os << "well-ordered: unknown (evidence: no descending pattern in the sample)\n";
  }
  if (a.order_type) os << "order type: " << to_string(*a.order_type) << " (exact)\n";
  for (const auto& c : a.consistency.checks) {
    os << "check " << c.name << ": " << (c.passed ? "pass" : "FAIL") << " - " << c.detail << "\n";
  }
  return os.str();
}

}  // namespace ordlex
