#pragma once

#include <map>
#include <string>
#include <vector>

#include "tensordecomp/partition.hpp"
#include "tensordecomp/rational.hpp"
#include "tensordecomp/symfunc.hpp"

namespace tensordecomp {

/// A representation of S_m given by irreducible multiplicities.
/// Stored multiplicities are always >= 1.
class RepDecomposition {
 public:
  using Mults = std::map<Partition, BigInt>;

  explicit RepDecomposition(int group_degree = 0) : group_degree_(group_degree) {}

  /// Reads a Schur expansion; every coefficient must be a nonnegative integer.
  static RepDecomposition from_schur(const SymFunc& f, int group_degree);

  int group_degree() const { return group_degree_; }
  const Mults& mults() const { return mults_; }
  bool empty() const { return mults_.empty(); }
  BigInt mult(const Partition& p) const;
  /// sum mult(eta) * dim(eta)
  BigInt dimension() const;
  SymFunc characteristic() const;

  void add(const Partition& p, const BigInt& m);

  friend bool operator==(const RepDecomposition&, const RepDecomposition&) = default;

 private:
  int group_degree_;
  Mults mults_;
};

/// One partition per cycle length i = 1..max: lambda_i |- m_i(mu).
/// Index i-1 holds lambda_i; lengths with m_i = 0 carry the empty partition.
using LambdaTuple = std::vector<Partition>;

/// All tuples for mu, lexicographic over each slot's canonical order.
std::vector<LambdaTuple> lambda_tuples(const Partition& mu);

/// prod_i s_{lambda_i}[h_i], Schur basis, degree sum i*|lambda_i|.
SymFunc q_lambda(const LambdaTuple& tuple);
/// prod_i s_{lambda_i}, Schur basis, degree sum |lambda_i|.
SymFunc r_lambda(const LambdaTuple& tuple);

/// The S_l representation dim(nu) * sum_Lambda <s_nu, Q_Lambda> R_Lambda.
RepDecomposition compute_pi(const Partition& mu, const Partition& nu);
void clear_pi_cache();

/// S_n on tensors of index type mu and symmetry type nu: Pi(mu, nu)
/// induced up with the trivial representation of S_{n-l}. Empty when n < l(mu).
RepDecomposition compute_rho(const Partition& mu, const Partition& nu, int n);

/// Stable multiplicities T^lambda / dim(nu) of (n - |lambda|, lambda).
struct DecompSymbol {
  int k = 0;
  Partition mu;
  Partition nu;
  std::map<Partition, BigInt> entries;

  bool empty() const { return entries.empty(); }
  friend bool operator==(const DecompSymbol&, const DecompSymbol&) = default;
};

/// Evaluated at n = 2k and re-checked at n = 2k + 1. Raises IntegrityError
/// if a multiplicity is not divisible by dim(nu) or the two rows disagree.
DecompSymbol stable_symbol(const Partition& mu, const Partition& nu);

/// Multiplicities of the irreducible S_infinity representations; these are
/// the multiplicities of compute_pi.
std::map<Partition, BigInt> infinite_symbol(const Partition& mu, const Partition& nu);

/// k! / prod_i (i!)^{m_i} m_i!: the number of ways to group k tensor slots
/// into blocks of index type mu.
BigInt type_multiplicity(const Partition& mu);

/// ch of the S_n representation on tensors of index type mu:
/// type_multiplicity(mu) * h_1^l * h_{n-l}, Schur basis; zero if n < l.
SymFunc mult_space_characteristic(const Partition& mu, int n);

/// Restriction to S_n of the GL_n irreducible of signature lambda:
/// sum_{eta |- n} <s_lambda, s_eta[h_0 + ... + h_|lambda|]> s_eta.
SymFunc restriction_characteristic(const Partition& lambda, int n);

/// ch of g -> fix(g)^k on S_n, Schur basis.
SymFunc xi_direct(int n, int k);

struct IdentityCheck {
  std::string name;   // "a", "b" or "c"
  std::string label;  // offending mu / nu, or "all"
  bool passed = false;
  SymFunc lhs;
  SymFunc rhs;
};

struct IdentityReport {
  int n = 0;
  int k = 0;
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

/// (a) sum_nu ch rho_{mu,nu} = mult_space_characteristic(mu, n) per mu;
/// (b) sum_Lambda <h_1^k, Q_Lambda> R_Lambda = type_multiplicity(mu) h_1^l per mu;
/// (c) xi_direct(n, k) = sum_lambda dim(lambda) restriction_characteristic(lambda, n)
///     = sum_{mu,nu} ch rho_{mu,nu}.
IdentityReport verify_identities(int n, int k);

}  // namespace tensordecomp
