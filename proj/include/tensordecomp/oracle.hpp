#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tensordecomp/decomp.hpp"
#include "tensordecomp/partition.hpp"
#include "tensordecomp/rational.hpp"

// Brute-force ground truth for compute_rho: traces of the joint S_n x S_k
// action on index tuples, projected onto isotypic components with
// characters. Nothing here touches symmetric functions.

namespace tensordecomp::oracle {

/// A permutation of {0, ..., size-1} as its image vector.
using Permutation = std::vector<int>;

struct Bounds {
  int max_n = 7;
  int max_k = 4;
};

class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Cycles laid out in decreasing length on consecutive points:
/// (3,1) -> 0->1->2->0, 3 fixed.
Permutation class_representative(const Partition& cycle_type);
Partition cycle_type(std::span<const int> perm);

/// Number of k-tuples (i_1..i_k) over {0..n-1} whose index multiset has type
/// mu and which satisfy g(i_{sigma^-1(t)}) = i_t for every slot t.
/// k = |mu| = sigma.size(), n = g.size().
long long count_fixed(const Partition& mu, std::span<const int> g, std::span<const int> sigma);

/// Fix_mu on class representatives, keyed by (cycle type of g, cycle type of sigma).
struct FixedCountTable {
  Partition mu;
  int n = 0;
  std::map<std::pair<Partition, Partition>, long long> counts;
};

FixedCountTable fixed_count_table(const Partition& mu, int n, Bounds bounds = {});

/// a^eta = dim(nu) / (n! k!) * sum over class pairs of
/// |C_g| |C_sigma| chi^eta(g) chi^nu(sigma) Fix_mu(g, sigma).
RepDecomposition oracle_rho(const Partition& mu, const Partition& nu, int n, Bounds bounds = {});

/// dim(nu) / k! * sum_sigma chi^nu(sigma) Fix_mu(id, sigma).
BigInt oracle_dim(const Partition& mu, const Partition& nu, int n, Bounds bounds = {});

}  // namespace tensordecomp::oracle
