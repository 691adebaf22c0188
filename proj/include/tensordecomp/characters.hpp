#pragma once

#include <map>
#include <vector>

#include "tensordecomp/partition.hpp"
#include "tensordecomp/rational.hpp"
#include "tensordecomp/symfunc.hpp"

namespace tensordecomp {

/// A conjugacy class of S_m, identified by its cycle type.
struct ClassIndex {
  Partition cycle_type;

  int degree() const { return cycle_type.size(); }
  /// Centralizer order z = prod_i i^{m_i} m_i!.
  BigInt centralizer_order() const;
  /// m! / z.
  BigInt class_size() const;
  /// +1 for even permutations, -1 for odd.
  int sign() const;

  friend auto operator<=>(const ClassIndex&, const ClassIndex&) = default;
};

BigInt centralizer_order(const Partition& cycle_type);

/// All classes of S_m in canonical order of their cycle types.
std::vector<ClassIndex> classes(int m);

/// A class function of S_m. Missing classes read as zero.
struct ClassFunction {
  int group_degree = 0;
  std::map<Partition, Rational> values;

  Rational operator()(const Partition& cycle_type) const;
};

/// Murnaghan-Nakayama value chi^lambda(rho), memoized on (lambda, rho).
/// Throws std::invalid_argument when |lambda| != |rho|.
BigInt mn_character(const Partition& lambda, const Partition& rho);
inline BigInt mn_character(const Partition& lambda, const ClassIndex& rho) {
  return mn_character(lambda, rho.cycle_type);
}

ClassFunction irreducible_character(const Partition& lambda);

/// (1/m!) sum_g f(g) conj(g(g)) over S_m, class-weighted.
Rational class_inner_product(const ClassFunction& f, const ClassFunction& g);

/// ch(f) = sum_rho f(rho) / z_rho * p_rho, in the PowerSum basis.
SymFunc characteristic(const ClassFunction& f);

/// <ch f, s_lambda>. With `is_character` set (the default), a negative or
/// non-integral result raises IntegrityError.
BigInt multiplicity(const ClassFunction& f, const Partition& lambda, bool is_character = true);
BigInt multiplicity(const SymFunc& f, const Partition& lambda, bool is_character = true);

void clear_character_cache();

}  // namespace tensordecomp
