#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tensordecomp/characters.hpp"
#include "tensordecomp/decomp.hpp"
#include "tensordecomp/io.hpp"
#include "tensordecomp/oracle.hpp"
#include "tensordecomp/parallel.hpp"
#include "tensordecomp/table.hpp"
#include "tensordecomp/verify.hpp"

using namespace tensordecomp;
using io::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Output {
  Json args = Json::object();
  Json result;
  std::string text;
  int exit_code = kExitOk;
};

std::string mults_text(const std::map<Partition, BigInt>& mults) {
  std::string out;
  for (const auto& [p, m] : mults) {
    if (!out.empty()) out += ",";
    out += (p.empty() ? std::string("∅") : "(" + to_string(p) + ")") + ":" + m.get_str();
  }
  return out;
}

Json integer_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

void require_same_k(const Partition& mu, const Partition& nu) {
  if (mu.size() != nu.size()) {
    throw std::invalid_argument("mu and nu must partition the same k (got " +
                                std::to_string(mu.size()) + " and " + std::to_string(nu.size()) + ")");
  }
}

void require_nonnegative(int value, const char* name) {
  if (value < 0) throw std::invalid_argument(std::string(name) + " must be nonnegative");
}

std::string zero_verdict(const Partition& mu, const Partition& nu, int n) {
  if (!dominates(nu, mu)) return "zero (ν does not dominate μ)";
  if (n < mu.length()) return "zero (n < l(μ))";
  return "zero";
}

// ---------------------------------------------------------------------------

Output cmd_partitions(int n) {
  require_nonnegative(n, "n");
  Output out;
  out.args = {{"n", n}};
  out.result = Json::array();
  std::ostringstream text;
  for (const auto& p : enumerate(n)) {
    out.result.push_back({{"partition", io::partition_json(p)},
                          {"dim", integer_json(dim(p))},
                          {"conjugate", io::partition_json(conjugate(p))}});
    text << to_string(p) << "\tdim " << dim(p).get_str() << "\n";
  }
  out.text = text.str();
  return out;
}

Output cmd_char(const std::string& lambda_text, const std::optional<std::string>& class_text) {
  const Partition lambda = parse_partition(lambda_text);
  Output out;
  out.args = {{"lambda", io::partition_json(lambda)}};
  std::ostringstream text;
  if (class_text) {
    const Partition rho = parse_partition(*class_text);
    out.args["class"] = io::partition_json(rho);
    const BigInt value = mn_character(lambda, rho);
    out.result = {{"value", integer_json(value)}};
    text << value.get_str() << "\n";
  } else {
    out.result = Json::array();
    for (const auto& c : classes(lambda.size())) {
      const BigInt value = mn_character(lambda, c);
      out.result.push_back({{"class", io::partition_json(c.cycle_type)}, {"value", integer_json(value)}});
      text << to_string(c.cycle_type) << "\t" << value.get_str() << "\n";
    }
  }
  out.text = text.str();
  return out;
}

Output cmd_plethysm(const std::string& outer_text, std::optional<int> inner_h,
                    const std::optional<std::string>& inner_text, std::optional<int> max_degree) {
  const Partition outer = parse_partition(outer_text);
  Output out;
  out.args = {{"outer", io::partition_json(outer)}};
  SymFunc value(Basis::Schur);
  if (inner_h) {
    require_nonnegative(*inner_h, "inner-h");
    out.args["inner_h"] = *inner_h;
    value = schur_plethysm_h(outer, *inner_h);
  } else {
    const Partition inner = parse_partition(*inner_text);
    out.args["inner"] = io::partition_json(inner);
    value = plethysm(schur(outer), schur(inner), max_degree);
  }
  if (max_degree) {
    out.args["max_degree"] = *max_degree;
    SymFunc cut(Basis::Schur);
    for (int d : value.degrees()) {
      if (d <= *max_degree) cut += value.degree_part(d);
    }
    value = cut;
  }
  value = convert(value, Basis::Schur);
  out.result = io::symfunc_json(value);
  out.text = (value.is_zero() ? std::string("0") : to_string(value)) + "\n";
  return out;
}

Output cmd_pi(const std::string& mu_text, const std::string& nu_text, bool infinite) {
  const Partition mu = parse_partition(mu_text);
  const Partition nu = parse_partition(nu_text);
  require_same_k(mu, nu);
  Output out;
  out.args = {{"mu", io::partition_json(mu)}, {"nu", io::partition_json(nu)}};
  if (infinite) {
    const auto symbol = infinite_symbol(mu, nu);
    out.result = {{"entries", io::mults_json(symbol)}};
    out.text = (symbol.empty() ? zero_verdict(mu, nu, mu.length()) : mults_text(symbol)) + "\n";
  } else {
    const auto pi = compute_pi(mu, nu);
    out.result = io::decomposition_json(pi);
    out.text = (pi.empty() ? zero_verdict(mu, nu, mu.length()) : mults_text(pi.mults())) + "\n";
  }
  return out;
}

Output cmd_rho(const std::string& mu_text, const std::string& nu_text, int n, bool with_oracle,
               oracle::Bounds bounds) {
  const Partition mu = parse_partition(mu_text);
  const Partition nu = parse_partition(nu_text);
  require_same_k(mu, nu);
  require_nonnegative(n, "n");
  Output out;
  out.args = {{"mu", io::partition_json(mu)}, {"nu", io::partition_json(nu)}, {"n", n}};
  const auto rho = compute_rho(mu, nu, n);
  const std::string verdict = rho.empty() ? zero_verdict(mu, nu, n) : "nonzero";
  out.result = {{"decomposition", io::decomposition_json(rho)}, {"verdict", verdict}};
  std::ostringstream text;
  text << (rho.empty() ? verdict : mults_text(rho.mults())) << "\n";
  if (with_oracle) {
    out.args["oracle"] = true;
    const auto brute = oracle::oracle_rho(mu, nu, n, bounds);
    const bool agree = brute == rho;
    out.result["oracle"] = {{"decomposition", io::decomposition_json(brute)}, {"agrees", agree}};
    text << "oracle: " << (brute.empty() ? std::string("0") : mults_text(brute.mults())) << "\n";
    text << "verdict: " << (agree ? "formula and oracle identical" : "MISMATCH") << "\n";
    if (!agree) out.exit_code = kExitFailure;
  }
  out.text = text.str();
  return out;
}

Output cmd_oracle(const std::string& mu_text, const std::string& nu_text, int n, oracle::Bounds bounds) {
  const Partition mu = parse_partition(mu_text);
  const Partition nu = parse_partition(nu_text);
  require_same_k(mu, nu);
  require_nonnegative(n, "n");
  Output out;
  out.args = {{"mu", io::partition_json(mu)}, {"nu", io::partition_json(nu)}, {"n", n}};
  const auto brute = oracle::oracle_rho(mu, nu, n, bounds);
  const BigInt dimension = oracle::oracle_dim(mu, nu, n, bounds);
  out.result = {{"decomposition", io::decomposition_json(brute)},
                {"trace_dimension", dimension.get_str()}};
  out.text = (brute.empty() ? std::string("0") : mults_text(brute.mults())) + "\ndim " +
             dimension.get_str() + "\n";
  return out;
}

Output cmd_symbol(const std::string& mu_text, const std::string& nu_text) {
  const Partition mu = parse_partition(mu_text);
  const Partition nu = parse_partition(nu_text);
  require_same_k(mu, nu);
  Output out;
  out.args = {{"mu", io::partition_json(mu)}, {"nu", io::partition_json(nu)}};
  const auto symbol = stable_symbol(mu, nu);
  out.result = io::symbol_json(symbol);
  out.text = (symbol.empty() ? std::string("0") : render_symbol(symbol)) + "\n";
  return out;
}

Output cmd_table(int k, const std::string& format, bool& force_json) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  Output out;
  out.args = {{"k", k}, {"format", format}};
  const auto table = build_symbol_table(k);
  out.result = io::table_json(table);
  if (format == "json") {
    force_json = true;
  } else if (format == "tex") {
    out.text = render_tex(table);
  } else {
    out.text = render_markdown(table);
  }
  return out;
}

Output cmd_verify(const std::string& suite, std::optional<int> k_opt, std::optional<int> n_opt) {
  const int k = k_opt.value_or(suite == "stability" ? 4 : 3);
  const int n = n_opt.value_or(6);
  if (k < 0 || n < 1) throw std::invalid_argument("verify needs k >= 0 and n >= 1");
  Output out;
  out.args = {{"suite", suite}};
  if (k_opt) out.args["k"] = *k_opt;
  if (n_opt) out.args["n"] = *n_opt;

  SuiteReport report;
  const bool all = suite == "all";
  if (all || suite == "tables") report.append(verify_tables());
  if (all || suite == "oracle") report.append(verify_oracle(k, n));
  if (all || suite == "identities") report.append(verify_identity_suite(k, n));
  if (all || suite == "stability") report.append(verify_stability(k_opt.value_or(4)));

  out.result = io::suite_report_json(report);
  std::ostringstream text;
  for (const auto& c : report.checks) {
    if (!c.passed) text << "FAIL " << c.suite << " " << c.name << ": " << c.detail << "\n";
  }
  if (report.all_passed()) {
    text << "PASS (" << report.checks.size() << " checks)\n";
  } else {
    text << "FAIL (" << report.failures() << " of " << report.checks.size() << " checks failed)\n";
    out.exit_code = kExitFailure;
  }
  out.text = text.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decompose tensor spaces under the joint action of S_n and S_k"};
  app.require_subcommand(1);

  bool json = false, timing = false;
  std::optional<std::string> cache_path;
  std::optional<unsigned> threads;
  app.add_flag("--json", json, "Emit a JSON document instead of text");
  app.add_flag("--timing", timing, "Report elapsed time");
  app.add_option("--cache", cache_path, "Plethysm cache file (default: $TENSORDECOMP_CACHE)");
  app.add_option("--threads", threads, "Worker threads, 0 = auto (default: $TENSORDECOMP_THREADS)");

  std::string mu, nu, lambda, outer, format = "md", suite = "all";
  std::optional<std::string> class_text, inner;
  std::optional<int> inner_h, max_degree, k_opt, n_opt;
  int n = 0, k = 0;
  bool with_oracle = false;
  oracle::Bounds bounds;

  auto* partitions = app.add_subcommand("partitions", "List the partitions of n");
  partitions->add_option("--n", n, "Size")->required();

  auto* chr = app.add_subcommand("char", "Irreducible character values");
  chr->add_option("--lambda", lambda, "Irreducible label")->required();
  chr->add_option("--class", class_text, "Cycle type (omit for the whole row)");

  auto* pleth = app.add_subcommand("plethysm", "Plethysm s_outer[g] in the Schur basis");
  pleth->add_option("--outer", outer, "Outer Schur function")->required();
  auto* ih = pleth->add_option("--inner-h", inner_h, "Inner complete homogeneous h_j");
  auto* is = pleth->add_option("--inner", inner, "Inner Schur function");
  ih->excludes(is);
  pleth->add_option("--max-degree", max_degree, "Drop terms above this degree");

  auto* pi = app.add_subcommand("pi", "Decomposition of Pi(mu, nu) over S_l");
  auto* infinite = app.add_subcommand("infinite", "Infinite decomposition symbol");
  auto* symbol = app.add_subcommand("symbol", "Stable decomposition symbol T_{mu,nu}");
  auto* rho = app.add_subcommand("rho", "Decomposition of rho_{mu,nu} over S_n");
  auto* orc = app.add_subcommand("oracle", "Brute-force decomposition by fixed-point counting");
  for (auto* sub : {pi, infinite, symbol, rho, orc}) {
    sub->add_option("--mu", mu, "Index type")->required();
    sub->add_option("--nu", nu, "Symmetry type")->required();
  }
  for (auto* sub : {rho, orc}) {
    sub->add_option("--n", n, "Dimension of the underlying space")->required();
    sub->add_option("--max-n", bounds.max_n, "Oracle bound on n")->capture_default_str();
    sub->add_option("--max-k", bounds.max_k, "Oracle bound on k")->capture_default_str();
  }
  rho->add_flag("--oracle", with_oracle, "Cross-check against the brute-force oracle");

  auto* table = app.add_subcommand("table", "Table of stable symbols for one k");
  table->add_option("--k", k, "Valence")->required();
  table->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"md", "json", "tex"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"tables", "oracle", "identities", "stability", "all"}))
      ->capture_default_str();
  verify->add_option("--k", k_opt, "Largest k");
  verify->add_option("--n", n_opt, "Largest n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (pleth->parsed() && !inner_h && !inner) {
    std::cerr << "error: plethysm needs --inner-h or --inner\n";
    return kExitUsage;
  }

  if (threads) {
    set_thread_count(*threads);
  }
  if (!cache_path) {
    if (const char* env = std::getenv("TENSORDECOMP_CACHE"); env && *env) cache_path = env;
  }
  if (cache_path) {
    std::string warning;
    io::load_cache(*cache_path, warning);
    if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
  }

  const auto start = std::chrono::steady_clock::now();
  const std::string command = app.get_subcommands().front()->get_name();
  Output out;
  try {
    if (partitions->parsed()) out = cmd_partitions(n);
    else if (chr->parsed()) out = cmd_char(lambda, class_text);
    else if (pleth->parsed()) out = cmd_plethysm(outer, inner_h, inner, max_degree);
    else if (pi->parsed()) out = cmd_pi(mu, nu, false);
    else if (infinite->parsed()) out = cmd_pi(mu, nu, true);
    else if (rho->parsed()) out = cmd_rho(mu, nu, n, with_oracle, bounds);
    else if (orc->parsed()) out = cmd_oracle(mu, nu, n, bounds);
    else if (symbol->parsed()) out = cmd_symbol(mu, nu);
    else if (table->parsed()) out = cmd_table(k, format, json);
    else out = cmd_verify(suite, k_opt, n_opt);
  } catch (const IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const oracle::BoundsError& e) {
    std::cerr << "error: " << e.what() << " (raise --max-n / --max-k)\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (json) {
    Json doc{{"schema", io::kSchema},
             {"command", {{"name", command}, {"args", out.args}}},
             {"result", out.result}};
    if (timing) doc["timing_ms"] = elapsed_ms;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << out.text;
    if (timing) std::cerr << "elapsed: " << elapsed_ms << " ms\n";
  }

  if (cache_path) {
    try {
      io::save_cache(*cache_path);
    } catch (const std::exception& e) {
      std::cerr << "warning: " << e.what() << "\n";
    }
  }
  return out.exit_code;
}
