// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "tensordecomp/characters.hpp"
#include "tensordecomp/decomp.hpp"
#include "tensordecomp/oracle.hpp"
#include "tensordecomp/table.hpp"
#include "tensordecomp/verify.hpp"

using namespace tensordecomp;

namespace {

struct Outcome {
  bool passed = true;
  std::string summary;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      if (failures.size() < 10) failures.push_back(what);
    }
  }
};

void reset_caches() {
  clear_symfunc_caches();
  clear_character_cache();
  clear_pi_cache();
}

bool run(const char* id, const char* title, double limit_ms, const std::function<Outcome()>& body) {
  reset_caches();
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.passed = false;
    out.failures.push_back(std::string("exception: ") + e.what());
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = limit_ms <= 0 || ms < limit_ms;
  const bool ok = out.passed && in_time;
  std::printf("%s %s: %s", id, ok ? "PASS" : "FAIL", title);
  if (!out.summary.empty()) std::printf(" (%s)", out.summary.c_str());
  if (limit_ms > 0) {
    std::printf(" [%.0f ms, limit %.0f ms]\n", ms, limit_ms);
  } else {
    std::printf(" [%.0f ms]\n", ms);
  }
  for (const auto& f : out.failures) std::printf("    %s\n", f.c_str());
  if (!in_time) std::printf("    runtime limit exceeded\n");
  std::fflush(stdout);
  return ok;
}

Partition ones(int k) { return Partition(std::vector<int>(k, 1)); }

std::string text(const RepDecomposition& rep) {
  if (rep.empty()) return "0";
  std::string out;
  for (const auto& [p, m] : rep.mults()) {
    if (!out.empty()) out += " + ";
    out += m.get_str() + "*" + to_compact_string(p);
  }
  return out;
}

// Ind(pi_sigma x Id_{n-|sigma|}) written as sum of pi_(n-|lambda|, lambda) over
// lambda with sigma/lambda a horizontal strip.
void add_induced(RepDecomposition& out, const Partition& sigma, const BigInt& coeff, int n) {
  for (int size = 0; size <= sigma.size(); ++size) {
    for (const auto& lambda : enumerate(size)) {
      if (horizontal_strip(sigma, lambda)) out.add(prepend_row(lambda, n), coeff);
    }
  }
}

using PiTerms = std::vector<std::pair<Partition, long>>;

RepDecomposition induced(const PiTerms& pi, int n) {
  RepDecomposition out(n);
  for (const auto& [sigma, c] : pi) add_induced(out, sigma, c, n);
  return out;
}

// ---------------------------------------------------------------------------

Outcome table_case(int k, std::size_t expected_nonzero) {
  Outcome out;
  const auto table = build_symbol_table(k);
  for (const auto& m : compare_with_reference(table)) {
    out.expect(false, "cell " + to_compact_string(m.mu) + "," + to_compact_string(m.nu) + ": expected '" +
                          m.expected + "', got '" + m.actual + "'");
  }
  std::size_t nonzero = 0;
  for (const auto& [key, s] : table.cells) nonzero += s.empty() ? 0 : 1;
  out.expect(nonzero == expected_nonzero, "nonzero cells: " + std::to_string(nonzero));
  out.summary = std::to_string(table.cells.size()) + " cells, " + std::to_string(nonzero) + " nonzero";
  return out;
}

Outcome examples() {
  Outcome out;
  std::size_t checked = 0;
  auto check = [&](const Partition& mu, const Partition& nu, int n, const RepDecomposition& expected) {
    const auto actual = compute_rho(mu, nu, n);
    ++checked;
    out.expect(actual == expected, "rho_{" + to_compact_string(mu) + "," + to_compact_string(nu) +
                                       "} n=" + std::to_string(n) + ": expected " + text(expected) +
                                       ", got " + text(actual));
  };
  const auto reg2 = [](long c) { return PiTerms{{{2}, c}, {{1, 1}, c}}; };

  for (int k = 1; k <= 4; ++k) {
    for (int n : {2 * k, 2 * k + 3}) {
      // Diagonal tensors.
      for (const auto& nu : enumerate(k)) {
        RepDecomposition expected(n);
        if (nu == Partition{k}) {
          expected.add({n}, 1);
          expected.add({n - 1, 1}, 1);
        }
        check({k}, nu, n, expected);
      }
      // Purely off-diagonal tensors.
      for (const auto& nu : enumerate(k)) check(ones(k), nu, n, induced({{nu, dim(nu).get_si()}}, n));
    }
  }

  // Displayed k = 2 and k = 3 cases written out in n.
  for (int n : {4, 7}) {
    check({1, 1}, {2}, n, [&] {
      RepDecomposition r(n);
      r.add({n}, 1), r.add({n - 1, 1}, 1), r.add({n - 2, 2}, 1);
      return r;
    }());
    check({1, 1}, {1, 1}, n, [&] {
      RepDecomposition r(n);
      r.add({n - 1, 1}, 1), r.add({n - 2, 1, 1}, 1);
      return r;
    }());
  }
  for (int n : {6, 9}) {
    check(ones(3), {2, 1}, n, [&] {
      RepDecomposition r(n);
      r.add({n - 1, 1}, 2), r.add({n - 2, 2}, 2), r.add({n - 2, 1, 1}, 2), r.add({n - 3, 2, 1}, 2);
      return r;
    }());
    check(ones(3), ones(3), n, [&] {
      RepDecomposition r(n);
      r.add({n - 2, 1, 1}, 1), r.add({n - 3, 1, 1, 1}, 1);
      return r;
    }());
  }

  const std::vector<std::tuple<Partition, Partition, PiTerms>> cases = {
      {{2, 1}, {3}, reg2(1)},
      {{2, 1}, {2, 1}, reg2(2)},
      {{2, 1}, ones(3), {}},
      {{3, 1}, {4}, reg2(1)},
      {{3, 1}, {3, 1}, reg2(3)},
      {{3, 1}, {2, 2}, {}},
      {{3, 1}, {2, 1, 1}, {}},
      {{3, 1}, ones(4), {}},
      {{2, 2}, {4}, {{{2}, 1}}},
      {{2, 2}, {3, 1}, {{{1, 1}, 3}}},
      {{2, 2}, {2, 2}, {{{2}, 2}}},
      {{2, 2}, {2, 1, 1}, {}},
      {{2, 2}, ones(4), {}},
      {{2, 1, 1}, {4}, {{{3}, 1}, {{2, 1}, 1}}},
      {{2, 1, 1}, {3, 1}, {{{3}, 3}, {{2, 1}, 6}, {ones(3), 3}}},
      {{2, 1, 1}, {2, 2}, {{{3}, 2}, {{2, 1}, 2}}},
      {{2, 1, 1}, {2, 1, 1}, {{{2, 1}, 3}, {ones(3), 3}}},
      {{2, 1, 1}, ones(4), {}},
  };
  for (const auto& [mu, nu, pi] : cases) {
    const int k = mu.size();
    for (int n : {2 * k, 2 * k + 3}) check(mu, nu, n, induced(pi, n));
  }
  out.summary = std::to_string(checked) + " decompositions";
  return out;
}

Outcome plethysm_identities() {
  Outcome out;
  for (int r = 1; r <= 4; ++r) {
    SymFunc even(Basis::Schur), frob(Basis::Schur);
    for (const auto& tau : enumerate(2 * r)) {
      bool all_even = true;
      for (int part : tau.parts()) all_even = all_even && part % 2 == 0;
      if (all_even) even.add_term(tau, 1);
      const auto f = frobenius(tau);
      bool shape = !f.arms.empty();
      for (std::size_t i = 0; i < f.arms.size(); ++i) shape = shape && f.legs[i] + 1 == f.arms[i];
      if (shape) frob.add_term(tau, 1);
    }
    const SymFunc sym = schur_plethysm_h({r}, 2);
    const SymFunc alt = schur_plethysm_h(ones(r), 2);
    out.expect(sym == even, "s_(" + std::to_string(r) + ")[h2] = " + to_string(sym));
    out.expect(alt == frob, "s_(1^" + std::to_string(r) + ")[h2] = " + to_string(alt));
  }
  out.summary = "r = 1..4";
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  SuiteReport report = verify_oracle(3, 6);
  std::size_t k4 = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& mu : enumerate(4)) {
      for (const auto& nu : enumerate(4)) {
        const auto formula = compute_rho(mu, nu, n);
        const auto brute = oracle::oracle_rho(mu, nu, n);
        ++k4;
        out.expect(formula == brute, to_compact_string(mu) + "," + to_compact_string(nu) + " n=" +
                                         std::to_string(n) + ": " + text(formula) + " vs " + text(brute));
      }
    }
  }
  for (const auto& c : report.checks) out.expect(c.passed, c.name + ": " + c.detail);
  out.summary = std::to_string(report.checks.size() + k4) + " triples";
  return out;
}

Outcome triangularity_and_stability() {
  Outcome out;
  std::size_t pairs = 0;
  for (int k = 1; k <= 6; ++k) {
    for (const auto& mu : enumerate(k)) {
      for (const auto& nu : enumerate(k)) {
        ++pairs;
        const bool zero = compute_rho(mu, nu, 2 * k).empty();
        out.expect(zero == !dominates(nu, mu),
                   "k=" + std::to_string(k) + " " + to_compact_string(mu) + "," + to_compact_string(nu));
      }
    }
  }
  const SuiteReport stability = verify_stability(5);
  for (const auto& c : stability.checks) out.expect(c.passed, c.name + ": " + c.detail);
  out.summary = std::to_string(pairs) + " pairs, " + std::to_string(stability.checks.size()) +
                " stability checks";
  return out;
}

Outcome identity_suite() {
  Outcome out;
  const SuiteReport report = verify_identity_suite(4, 8);
  for (const auto& c : report.checks) out.expect(c.passed, c.name + ": " + c.detail);
  out.summary = std::to_string(report.checks.size()) + " checks";
  return out;
}

Outcome global_dimension() {
  Outcome out;
  for (int k = 1; k <= 4; ++k) {
    for (int n = 1; n <= 7; ++n) {
      BigInt formula = 0, brute = 0, power;
      mpz_ui_pow_ui(power.get_mpz_t(), n, k);
      for (const auto& mu : enumerate(k)) {
        for (const auto& nu : enumerate(k)) {
          formula += compute_rho(mu, nu, n).dimension();
          brute += oracle::oracle_dim(mu, nu, n);
        }
      }
      const std::string at = "k=" + std::to_string(k) + " n=" + std::to_string(n);
      out.expect(formula == power, at + " formula " + formula.get_str());
      out.expect(brute == power, at + " oracle " + brute.get_str());
    }
  }
  out.summary = "k <= 4, n <= 7";
  return out;
}

Outcome algebra_properties() {
  Outcome out;
  std::size_t checks = 0;
  for (int n = 0; n <= 6; ++n) {
    for (const auto& a : enumerate(n)) {
      for (const auto& b : enumerate(n)) {
        ++checks;
        out.expect(inner_product(schur(a), schur(b)) == (a == b ? 1 : 0),
                   "<s" + to_string(a) + ", s" + to_string(b) + ">");
      }
    }
  }
  for (int m = 0; m <= 6; ++m) {
    for (const auto& a : enumerate(m)) {
      const auto chi = irreducible_character(a);
      for (const auto& b : enumerate(m)) {
        ++checks;
        out.expect(class_inner_product(chi, irreducible_character(b)) == (a == b ? 1 : 0),
                   "<chi" + to_string(a) + ", chi" + to_string(b) + ">");
      }
    }
  }
  for (int a = 1; a <= 8; ++a) {
    for (int b = 1; a * b <= 8; ++b) {
      for (const auto& outer : enumerate(a)) {
        for (const auto& inner : enumerate(b)) {
          ++checks;
          const SymFunc f = convert(plethysm(schur(outer), schur(inner)), Basis::Schur);
          bool positive = !f.is_zero();
          for (const auto& [p, c] : f.terms()) positive = positive && is_integer(c) && c > 0;
          out.expect(positive, "s" + to_string(outer) + "[s" + to_string(inner) + "]");
        }
      }
    }
  }
  const Basis bases[] = {Basis::Schur, Basis::PowerSum, Basis::Homogeneous};
  for (int n = 0; n <= 8; ++n) {
    for (const auto& p : enumerate(n)) {
      for (Basis from : bases) {
        const SymFunc f = SymFunc::element(from, p);
        for (Basis to : bases) {
          ++checks;
          out.expect(convert(convert(f, to), from) == f,
                     std::string(basis_name(from)) + to_string(p) + " via " + std::string(basis_name(to)));
        }
      }
    }
  }
  out.summary = std::to_string(checks) + " checks";
  return out;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run("AC1", "symbol table for k = 3", 1000, [] { return table_case(3, 6); });
  ok &= run("AC2", "symbol table for k = 4", 5000, [] { return table_case(4, 15); });
  ok &= run("AC3", "worked decompositions at n = 2k and n = 2k + 3", 0, examples);
  ok &= run("AC4", "s_(r)[h2] and s_(1^r)[h2]", 1000, plethysm_identities);
  ok &= run("AC5", "formula agrees with the brute-force oracle", 120000, oracle_equivalence);
  ok &= run("AC6", "upper triangularity and stability", 0, triangularity_and_stability);
  ok &= run("AC7", "character identities (a), (b), (c)", 60000, identity_suite);
  ok &= run("AC8", "total dimension n^k", 0, global_dimension);
  ok &= run("AC9", "algebra property suite", 120000, algebra_properties);
  std::printf("%s\n", ok ? "ALL PASS" : "SOME CRITERIA FAILED");
  return ok ? 0 : 1;
}
