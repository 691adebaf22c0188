#include "tensordecomp/oracle.hpp"

#include <algorithm>
#include <string>

#include "tensordecomp/characters.hpp"
#include "tensordecomp/parallel.hpp"

namespace tensordecomp::oracle {

namespace {

void check_bounds(const Partition& mu, int n, const Bounds& bounds) {
  if (n < 0) throw std::invalid_argument("oracle: n must be nonnegative");
  if (n > bounds.max_n || mu.size() > bounds.max_k) {
    throw BoundsError("oracle limited to n <= " + std::to_string(bounds.max_n) + ", k <= " +
                      std::to_string(bounds.max_k) + " (got n = " + std::to_string(n) +
                      ", k = " + std::to_string(mu.size()) + ")");
  }
}

// Sorted multiplicities of the values in `tuple`, as a partition.
Partition content_type(std::span<const int> tuple, int n, std::vector<int>& scratch) {
  scratch.assign(n, 0);
  for (int i : tuple) ++scratch[i];
  return Partition::from_parts(scratch);
}

}  // namespace

Permutation class_representative(const Partition& type) {
  Permutation perm(type.size());
  int start = 0;
  for (int len : type.parts()) {
    for (int j = 0; j < len; ++j) perm[start + j] = start + (j + 1) % len;
    start += len;
  }
  return perm;
}

Partition cycle_type(std::span<const int> perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_parts(std::move(lengths));
}

long long count_fixed(const Partition& mu, std::span<const int> g, std::span<const int> sigma) {
  const int n = static_cast<int>(g.size());
  const int k = static_cast<int>(sigma.size());
  if (mu.size() != k) throw std::invalid_argument("count_fixed: |mu| must equal the degree of sigma");
  if (n == 0) return k == 0 ? 1 : 0;
  std::vector<int> sigma_inv(k);
  for (int t = 0; t < k; ++t) sigma_inv[sigma[t]] = t;

  std::vector<int> tuple(k, 0);
  std::vector<int> scratch;
  long long count = 0;
  while (true) {
    bool fixed = true;
    for (int t = 0; t < k && fixed; ++t) fixed = g[tuple[sigma_inv[t]]] == tuple[t];
    if (fixed && content_type(tuple, n, scratch) == mu) ++count;
    // Odometer increment over {0..n-1}^k.
    int pos = k - 1;
    while (pos >= 0 && ++tuple[pos] == n) tuple[pos--] = 0;
    if (pos < 0) break;
  }
  return count;
}

FixedCountTable fixed_count_table(const Partition& mu, int n, Bounds bounds) {
  check_bounds(mu, n, bounds);
  const auto g_classes = classes(n);
  const auto s_classes = classes(mu.size());
  std::vector<long long> slots(g_classes.size() * s_classes.size());
  parallel_for(slots.size(), [&](std::size_t idx) {
    const auto g = class_representative(g_classes[idx / s_classes.size()].cycle_type);
    const auto s = class_representative(s_classes[idx % s_classes.size()].cycle_type);
    slots[idx] = count_fixed(mu, g, s);
  });
  FixedCountTable table{mu, n, {}};
  for (std::size_t idx = 0; idx < slots.size(); ++idx) {
    table.counts.emplace(std::pair{g_classes[idx / s_classes.size()].cycle_type,
                                   s_classes[idx % s_classes.size()].cycle_type},
                         slots[idx]);
  }
  return table;
}

RepDecomposition oracle_rho(const Partition& mu, const Partition& nu, int n, Bounds bounds) {
  if (mu.size() != nu.size()) throw std::invalid_argument("oracle_rho: |mu| != |nu|");
  const FixedCountTable table = fixed_count_table(mu, n, bounds);
  const int k = mu.size();
  const auto g_classes = classes(n);
  const auto s_classes = classes(k);

  // Contract the sigma side once: F(g) = sum_sigma |C_sigma| chi^nu(sigma) Fix(g, sigma).
  std::map<Partition, BigInt> projected;
  for (const auto& g : g_classes) {
    BigInt sum = 0;
    for (const auto& s : s_classes) {
      sum += s.class_size() * mn_character(nu, s) * BigInt(static_cast<long>(table.counts.at({g.cycle_type, s.cycle_type})));
    }
    projected.emplace(g.cycle_type, sum);
  }

  const Rational scale = Rational(dim(nu)) / Rational(factorial(n) * factorial(k));
  RepDecomposition out(n);
  for (const auto& eta : enumerate(n)) {
    BigInt sum = 0;
    for (const auto& g : g_classes) sum += g.class_size() * mn_character(eta, g) * projected.at(g.cycle_type);
    out.add(eta, require_nonnegative_integer(scale * Rational(sum),
                                             "oracle multiplicity of " + to_compact_string(eta)));
  }
  return out;
}

BigInt oracle_dim(const Partition& mu, const Partition& nu, int n, Bounds bounds) {
  if (mu.size() != nu.size()) throw std::invalid_argument("oracle_dim: |mu| != |nu|");
  check_bounds(mu, n, bounds);
  const int k = mu.size();
  const Permutation identity = class_representative(Partition(std::vector<int>(n, 1)));
  BigInt sum = 0;
  for (const auto& s : classes(k)) {
    const auto sigma = class_representative(s.cycle_type);
    sum += s.class_size() * mn_character(nu, s) * BigInt(static_cast<long>(count_fixed(mu, identity, sigma)));
  }
  return require_nonnegative_integer(Rational(dim(nu)) * Rational(sum) / Rational(factorial(k)),
                                     "oracle dimension");
}

}  // namespace tensordecomp::oracle
