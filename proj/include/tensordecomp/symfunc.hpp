#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tensordecomp/partition.hpp"
#include "tensordecomp/rational.hpp"

namespace tensordecomp {

enum class Basis { Schur, PowerSum, Homogeneous };

std::string_view basis_name(Basis b);
/// Inverse of basis_name ("schur", "powersum", "homogeneous").
Basis parse_basis(std::string_view name);

/// A finite symmetric function: exact rational coefficients on one basis.
/// Zero coefficients are never stored; terms iterate in canonical partition
/// order, so two equal functions in the same basis compare equal.
class SymFunc {
 public:
  using Terms = std::map<Partition, Rational>;

  explicit SymFunc(Basis basis = Basis::Schur) : basis_(basis) {}
  SymFunc(Basis basis, Terms terms);

  static SymFunc element(Basis basis, const Partition& p, const Rational& c = 1);
  static SymFunc constant(const Rational& c, Basis basis = Basis::Schur);

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Partition& p) const;
  /// Sorted distinct degrees that carry a nonzero coefficient.
  std::vector<int> degrees() const;
  /// The homogeneous component of the given degree.
  SymFunc degree_part(int degree) const;

  void add_term(const Partition& p, const Rational& c);

  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator-=(const SymFunc& other);
  SymFunc& operator*=(const Rational& scalar);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const Rational& s) { return a *= s; }
  friend SymFunc operator*(const Rational& s, SymFunc a) { return a *= s; }

  /// Same basis and same terms. Use convert() first to compare across bases.
  friend bool operator==(const SymFunc&, const SymFunc&) = default;

 private:
  void require_same_basis(const SymFunc& other) const;

  Basis basis_;
  Terms terms_;
};

SymFunc schur(const Partition& p);
SymFunc power_sum(const Partition& p);
SymFunc homogeneous(const Partition& p);
/// h_r as a one-term Homogeneous function (h_0 = 1).
SymFunc complete(int r);

SymFunc convert(const SymFunc& f, Basis target);

/// Product, returned in f's basis. Computed in the power-sum basis, where
/// multiplication is concatenation of cycle types.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// s_p * h_r as a Schur expansion: all q with q/p a horizontal r-strip.
SymFunc pieri(const Partition& p, int r);

/// Hall inner product; power sums are orthogonal with <p_a, p_a> = z_a.
Rational inner_product(const SymFunc& f, const SymFunc& g);

/// f[g], returned in f's basis. When max_degree is set, every power-sum
/// term of degree above it is dropped as soon as it appears; the result is
/// then exact in all degrees <= max_degree.
SymFunc plethysm(const SymFunc& f, const SymFunc& g,
                 std::optional<int> max_degree = std::nullopt);

/// s_p[h_j] in the Schur basis, memoized process-wide.
SymFunc schur_plethysm_h(const Partition& p, int j);

/// h_0 + h_1 + ... + h_n in the Homogeneous basis.
SymFunc truncated_h(int n);

/// Memo access for persistence. Entries are (p, j, s_p[h_j] in Schur basis).
struct PlethysmEntry {
  Partition outer;
  int inner_degree;
  SymFunc value;
};
std::vector<PlethysmEntry> plethysm_cache_entries();
void seed_plethysm_cache(const PlethysmEntry& entry);
void clear_symfunc_caches();

/// Human-readable "2*s3,1 + s2,2 - 1/2*p1,1" style; "0" when empty.
std::string to_string(const SymFunc& f);

}  // namespace tensordecomp
