// ordlex: analyze, synthesize, enumerate, and verify lexicographically
// ordered context-free languages.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ordlex/error.hpp"
#include "ordlex/oracle.hpp"
#include "ordlex/report.hpp"
#include "ordlex/synth.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotScattered = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ordlex::Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ordlex::Error("cannot write " + path);
  out << text;
}

ordlex::Grammar load_grammar(const std::string& path) {
  try {
    return ordlex::parse_grammar(read_file(path));
  } catch (const ordlex::ParseError& e) {
    throw ordlex::Error(path + ":" + std::to_string(e.position()) + ": " + e.what());
  }
}

int run_analyze(const std::vector<std::string>& paths, bool as_json, unsigned jobs) {
  std::vector<std::optional<ordlex::Analysis>> results(paths.size());
  std::vector<std::string> errors(paths.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < paths.size();) {
      try {
        results[i] = ordlex::analyze_grammar(load_grammar(paths[i]), {}, paths[i]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs) && t < paths.size(); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kExitOk;
  nlohmann::json all = nlohmann::json::array();
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (!results[i]) {
      std::cerr << "ordlex: " << errors[i] << "\n";
      code = kExitError;
      continue;
    }
    if (!results[i]->scattered() && code == kExitOk) code = kExitNotScattered;
    if (as_json) {
      all.push_back(ordlex::analysis_json(*results[i]));
    } else {
      std::cout << ordlex::analysis_text(*results[i]);
    }
  }
  if (as_json) std::cout << (paths.size() == 1 && !all.empty() ? all[0] : all).dump(2) << "\n";
  return code;
}

int run_synth(const std::string& ordinal_text, const std::string& out_path) {
  const ordlex::Ordinal alpha = ordlex::parse_ordinal(ordinal_text);
  const ordlex::Synthesis s = ordlex::synth_grammar(alpha);
  const std::string grammar = "# order type " + ordlex::to_string(s.certificate->type) + "\n" +
                              ordlex::to_text(s.grammar);
  const std::string cert = ordlex::certificate_to_json(*s.certificate) + "\n";
  if (out_path.empty()) {
    std::cout << grammar << cert;
  } else {
    write_file(out_path, grammar);
    write_file(out_path + ".cert.json", cert);
    std::cout << "type " << ordlex::to_string(s.certificate->type) << ": wrote " << out_path << " and " << out_path
              << ".cert.json\n";
  }
  return kExitOk;
}

int run_enum(const std::string& path, std::size_t max_length) {
  for (const auto& w : ordlex::enumerate_words(load_grammar(path), max_length).words) std::cout << w << "\n";
  return kExitOk;
}

int run_verify(const std::string& path, const std::string& ordinal_text, std::size_t max_length,
               std::string cert_path) {
  ordlex::AnalysisOptions options;
  options.expected_type = ordlex::parse_ordinal(ordinal_text);
  options.max_length = max_length;
  if (cert_path.empty() && std::filesystem::exists(path + ".cert.json")) cert_path = path + ".cert.json";
  if (!cert_path.empty()) options.certificate = ordlex::certificate_from_json(read_file(cert_path));
  const ordlex::Analysis a = ordlex::analyze_grammar(load_grammar(path), options, path);
  bool ok = a.consistency.all_passed();
  if (!a.scattered()) {
    std::cout << "FAIL scattered: the language is not scattered\n";
    ok = false;
  }
  for (const auto& c : a.consistency.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  }
  std::cout << (ok ? "verified: order type " + ordlex::to_string(*options.expected_type) : std::string("not verified"))
            << "\n";
  return ok ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lexicographic orderings of context-free languages"};
  app.require_subcommand(1);

  std::vector<std::string> analyze_paths;
  bool as_json = false;
  unsigned jobs = 1;
  auto* analyze = app.add_subcommand("analyze", "Scatteredness, rank, well-order, and order type of grammars");
  analyze->add_option("files", analyze_paths, "Grammar files")->required()->check(CLI::ExistingFile);
  analyze->add_flag("--json", as_json, "Emit the JSON report");
  analyze->add_option("--jobs", jobs, "Grammars analyzed in parallel")->check(CLI::Range(1u, 64u));

  std::string ordinal_text, out_path;
  auto* synth = app.add_subcommand("synth", "Emit a grammar whose language has the given order type");
  synth->add_option("ordinal", ordinal_text, "Ordinal below w^(w^w), e.g. w^2+3")->required();
  synth->add_option("--out", out_path, "Grammar path; the certificate goes to PATH.cert.json");

  std::string enum_path;
  std::size_t enum_length = 10;
  auto* enumerate = app.add_subcommand("enum", "List the words up to a length in lexicographic order");
  enumerate->add_option("file", enum_path, "Grammar file")->required()->check(CLI::ExistingFile);
  enumerate->add_option("--maxlen", enum_length, "Length cap (at most 20)")->check(CLI::Range(0, 20));

  std::string verify_path, verify_ordinal, cert_path;
  std::size_t verify_length = 12;
  auto* verify = app.add_subcommand("verify", "Check that a grammar realizes an order type");
  verify->add_option("file", verify_path, "Grammar file")->required()->check(CLI::ExistingFile);
  verify->add_option("--ordinal", verify_ordinal, "Expected order type")->required();
  verify->add_option("--maxlen", verify_length, "Enumeration length for certificate checks (at most 20)")
      ->check(CLI::Range(0, 20));
  verify->add_option("--cert", cert_path, "Certificate JSON (default: FILE.cert.json when present)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version exit 0; every usage error maps to the error code.
    return app.exit(e) == 0 ? 0 : kExitError;
  }

  try {
    if (*analyze) return run_analyze(analyze_paths, as_json, jobs);
    if (*synth) return run_synth(ordinal_text, out_path);
    if (*enumerate) return run_enum(enum_path, enum_length);
    if (*verify) return run_verify(verify_path, verify_ordinal, verify_length, cert_path);
  } catch (const std::exception& e) {
    std::cerr << "ordlex: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
