#include "tensordecomp/verify.hpp"

#include <algorithm>
#include <mutex>

#include "tensordecomp/parallel.hpp"
#include "tensordecomp/table.hpp"

namespace tensordecomp {

namespace {

std::string pair_label(const Partition& mu, const Partition& nu) {
  return "mu=" + to_compact_string(mu) + " nu=" + to_compact_string(nu);
}

std::string rep_text(const RepDecomposition& rep) {
  if (rep.empty()) return "0";
  std::string out;
  for (const auto& [p, m] : rep.mults()) {
    if (!out.empty()) out += ",";
    out += to_compact_string(p) + ":" + m.get_str();
  }
  return out;
}

std::vector<std::pair<Partition, Partition>> all_pairs(int k) {
  std::vector<std::pair<Partition, Partition>> out;
  for (const auto& mu : enumerate(k)) {
    for (const auto& nu : enumerate(k)) out.emplace_back(mu, nu);
  }
  return out;
}

}  // namespace

bool SuiteReport::all_passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const SuiteCheck& c) { return !c.passed; }));
}

void SuiteReport::append(const SuiteReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

SuiteReport verify_tables() {
  SuiteReport report;
  for (int k : {3, 4}) {
    const auto table = build_symbol_table(k);
    const auto mismatches = compare_with_reference(table);
    for (const auto& mu : table.partitions) {
      for (const auto& nu : table.partitions) {
        SuiteCheck check{"tables", "k=" + std::to_string(k) + " " + pair_label(mu, nu), true, ""};
        for (const auto& m : mismatches) {
          if (m.mu == mu && m.nu == nu) {
            check.passed = false;
            check.detail = "expected '" + m.expected + "', got '" + m.actual + "'";
          }
        }
        report.checks.push_back(std::move(check));
      }
    }
  }
  return report;
}

SuiteReport verify_oracle(int k, int n) {
  struct Case {
    Partition mu, nu;
    int n;
  };
  std::vector<Case> cases;
  for (int kk = 1; kk <= k; ++kk) {
    for (int nn = 1; nn <= n; ++nn) {
      for (const auto& [mu, nu] : all_pairs(kk)) cases.push_back({mu, nu, nn});
    }
  }
  std::vector<SuiteCheck> checks(cases.size());
  const oracle::Bounds bounds{std::max(n, oracle::Bounds{}.max_n), std::max(k, oracle::Bounds{}.max_k)};
  parallel_for(cases.size(), [&](std::size_t i) {
    const auto& c = cases[i];
    const auto formula = compute_rho(c.mu, c.nu, c.n);
    const auto brute = oracle::oracle_rho(c.mu, c.nu, c.n, bounds);
    SuiteCheck check{"oracle", pair_label(c.mu, c.nu) + " n=" + std::to_string(c.n),
                     formula == brute, ""};
    if (!check.passed) check.detail = "formula " + rep_text(formula) + ", oracle " + rep_text(brute);
    checks[i] = std::move(check);
  });
  return SuiteReport{std::move(checks)};
}

SuiteReport verify_identity_suite(int k, int n) {
  SuiteReport report;
  for (int kk = 0; kk <= k; ++kk) {
    for (int nn = std::max(kk, 1); nn <= n; ++nn) {
      const auto identities = verify_identities(nn, kk);
      for (const auto& c : identities.checks) {
        SuiteCheck check{"identities",
                         "(" + c.name + ") " + c.label + " n=" + std::to_string(nn) +
                             " k=" + std::to_string(kk),
                         c.passed, ""};
        if (!c.passed) check.detail = "lhs " + to_string(c.lhs) + ", rhs " + to_string(c.rhs);
        report.checks.push_back(std::move(check));
      }
    }
  }
  return report;
}

SuiteReport verify_stability(int k) {
  SuiteReport report;
  for (int kk = 1; kk <= k; ++kk) {
    const int base_n = 2 * kk;
    for (const auto& [mu, nu] : all_pairs(kk)) {
      const std::string label = pair_label(mu, nu);
      const auto base = compute_rho(mu, nu, base_n);

      SuiteCheck tri{"stability", "triangular " + label, base.empty() == !dominates(nu, mu), ""};
      for (const auto& [eta, m] : base.mults()) {
        if (remove_first_row(eta).size() > mu.length()) {
          tri.passed = false;
          tri.detail = "component " + to_compact_string(eta) + " below the first row exceeds l(mu)";
        }
      }
      if (!tri.passed && tri.detail.empty()) tri.detail = "rho at n=" + std::to_string(base_n) + " is " + rep_text(base);
      report.checks.push_back(std::move(tri));

      for (int later_n : {base_n + 1, base_n + 2}) {
        const auto later = compute_rho(mu, nu, later_n);
        SuiteCheck stable{"stability", "stable " + label + " n=" + std::to_string(later_n), true, ""};
        for (int size = 0; size <= kk && stable.passed; ++size) {
          for (const auto& lambda : enumerate(size)) {
            const BigInt a = base.mult(prepend_row(lambda, base_n));
            const BigInt b = later.mult(prepend_row(lambda, later_n));
            if (a != b) {
              stable.passed = false;
              stable.detail = "lambda=" + to_compact_string(lambda) + ": " + a.get_str() + " vs " + b.get_str();
              break;
            }
          }
        }
        // Nothing may appear at the larger n outside the stable range.
        for (const auto& [eta, m] : later.mults()) {
          if (remove_first_row(eta).size() > kk) {
            stable.passed = false;
            stable.detail = "unexpected component " + to_compact_string(eta);
          }
        }
        report.checks.push_back(std::move(stable));
      }
    }
  }
  return report;
}

}  // namespace tensordecomp
