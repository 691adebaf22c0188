#include "tensordecomp/characters.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tensordecomp/parallel.hpp"

namespace tensordecomp {

BigInt centralizer_order(const Partition& cycle_type) {
  BigInt z = 1;
  const auto mults = cycle_type.multiplicities();
  for (std::size_t i = 0; i < mults.size(); ++i) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), i + 1, static_cast<unsigned long>(mults[i]));
    z *= power * factorial(static_cast<unsigned long>(mults[i]));
  }
  return z;
}

BigInt ClassIndex::centralizer_order() const { return tensordecomp::centralizer_order(cycle_type); }

BigInt ClassIndex::class_size() const {
  return factorial(static_cast<unsigned long>(degree())) / centralizer_order();
}

int ClassIndex::sign() const {
  // A cycle of length c is a product of c-1 transpositions.
  return (cycle_type.size() - cycle_type.length()) % 2 == 0 ? 1 : -1;
}

std::vector<ClassIndex> classes(int m) {
  std::vector<ClassIndex> out;
  for (auto& p : enumerate(m)) out.push_back({std::move(p)});
  return out;
}

Rational ClassFunction::operator()(const Partition& cycle_type) const {
  if (auto it = values.find(cycle_type); it != values.end()) return it->second;
  return 0;
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Partition, Partition>& key) const noexcept {
    const PartitionHash h;
    return h(key.first) * 1000003u ^ h(key.second);
  }
};

MemoCache<std::pair<Partition, Partition>, BigInt, PairHash>& character_cache() {
  static MemoCache<std::pair<Partition, Partition>, BigInt, PairHash> cache;
  return cache;
}

// Beta-set (first-column hook lengths) of a partition padded to `len` rows.
std::vector<int> beta_set(const Partition& p, int len) {
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = p[i] + (len - 1 - i);
  return beta;
}

Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts(len);
  for (int i = 0; i < len; ++i) parts[i] = beta[i] - (len - 1 - i);
  return Partition(std::move(parts));
}

BigInt compute_character(const Partition& lambda, const Partition& rho);

BigInt cached_character(const Partition& lambda, const Partition& rho) {
  return character_cache().get_or_compute({lambda, rho},
                                          [&] { return compute_character(lambda, rho); });
}

BigInt compute_character(const Partition& lambda, const Partition& rho) {
  if (rho.empty()) return 1;
  // Strip the largest cycle; a border strip of length r is a bead moving r
  // positions down on the abacus, with sign (-1)^(beads jumped over).
  const int r = rho[0];
  const Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
  const int len = lambda.length();
  std::vector<int> beta = beta_set(lambda, len);
  BigInt total = 0;
  for (int i = 0; i < len; ++i) {
    const int target = beta[i] - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = 0;
    for (int b : beta) {
      if (b > target && b < beta[i]) ++jumped;
    }
    std::vector<int> moved = beta;
    moved[i] = target;
    const BigInt value = cached_character(from_beta_set(std::move(moved)), rest);
    if (jumped % 2 == 0) {
      total += value;
    } else {
      total -= value;
    }
  }
  return total;
}

}  // namespace

BigInt mn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) {
    throw std::invalid_argument("mn_character: |lambda| = " + std::to_string(lambda.size()) +
                                " but |rho| = " + std::to_string(rho.size()));
  }
  return cached_character(lambda, rho);
}

void clear_character_cache() { character_cache().clear(); }

ClassFunction irreducible_character(const Partition& lambda) {
  ClassFunction f{lambda.size(), {}};
  for (const auto& c : classes(lambda.size())) {
    f.values.emplace(c.cycle_type, Rational(mn_character(lambda, c)));
  }
  return f;
}

Rational class_inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.group_degree != g.group_degree) {
    throw std::invalid_argument("class_inner_product: class functions of different groups");
  }
  Rational total = 0;
  for (const auto& c : classes(f.group_degree)) {
    total += f(c.cycle_type) * g(c.cycle_type) / Rational(c.centralizer_order());
  }
  return total;
}

SymFunc characteristic(const ClassFunction& f) {
  SymFunc out(Basis::PowerSum);
  for (const auto& c : classes(f.group_degree)) {
    out.add_term(c.cycle_type, f(c.cycle_type) / Rational(c.centralizer_order()));
  }
  return out;
}

BigInt multiplicity(const SymFunc& f, const Partition& lambda, bool is_character) {
  const Rational m = inner_product(f, schur(lambda));
  const std::string what = "multiplicity of " + to_compact_string(lambda);
  if (is_character) return require_nonnegative_integer(m, what);
  return require_integer(m, what);
}

BigInt multiplicity(const ClassFunction& f, const Partition& lambda, bool is_character) {
  if (f.group_degree != lambda.size()) {
    throw std::invalid_argument("multiplicity: degree mismatch");
  }
  return multiplicity(characteristic(f), lambda, is_character);
}

}  // namespace tensordecomp
