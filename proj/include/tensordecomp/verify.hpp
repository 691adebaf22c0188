#pragma once

#include <string>
#include <vector>

#include "tensordecomp/oracle.hpp"

namespace tensordecomp {

struct SuiteCheck {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;  // counterexample data when failed
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;

  bool all_passed() const;
  std::size_t failures() const;
  void append(const SuiteReport& other);
};

/// Symbol tables for k = 3 and k = 4 against the reference cells.
SuiteReport verify_tables();

/// compute_rho against oracle_rho for every mu, nu |- k' <= k and 1 <= n' <= n.
SuiteReport verify_oracle(int k, int n);

/// verify_identities for every k' <= k and max(k', 1) <= n' <= n.
SuiteReport verify_identity_suite(int k, int n);

/// For every k' <= k: rho vanishes exactly when nu does not dominate mu, rows
/// below the first have at most l(mu) cells at n = 2k', and multiplicities of
/// (n - |lambda|, lambda) agree across n = 2k', 2k' + 1, 2k' + 2.
SuiteReport verify_stability(int k);

}  // namespace tensordecomp
