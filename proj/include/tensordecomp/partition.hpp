#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tensordecomp/rational.hpp"

namespace tensordecomp {

/// An integer partition: strictly positive, weakly decreasing parts.
///
/// Instances are always canonical (no zero parts), so equality and hashing
/// are plain sequence comparisons. The ordering groups partitions by size
/// and, within one size, lists them reverse-lexicographically:
/// (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1). Iterating a std::map keyed by
/// Partition therefore yields the canonical order used for every output.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless `parts` is weakly decreasing and
  /// positive. Trailing zeros are accepted and dropped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts arbitrary positive parts into canonical order.
  static Partition from_parts(std::vector<int> parts);
  /// (1^{m_1} 2^{m_2} ...) where mults[i-1] = m_i.
  static Partition from_multiplicities(std::span<const int> mults);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// i-th part (0-based), zero beyond the length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  /// m_i: number of parts equal to i.
  int multiplicity(int i) const;
  /// m_1..m_{largest part}.
  std::vector<int> multiplicities() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// All partitions of n in canonical (reverse-lexicographic) order.
std::vector<Partition> enumerate(int n);

/// Dominance order: every prefix sum of `upper` is >= that of `lower`.
/// Throws std::invalid_argument when the sizes differ.
bool dominates(const Partition& upper, const Partition& lower);

Partition conjugate(const Partition& p);

/// Number of standard Young tableaux (hook length formula).
BigInt dim(const Partition& p);

struct FrobeniusCoordinates {
  std::vector<int> arms;  // a_i = p_i - i
  std::vector<int> legs;  // b_i = p'_i - i
  friend bool operator==(const FrobeniusCoordinates&, const FrobeniusCoordinates&) = default;
};

FrobeniusCoordinates frobenius(const Partition& p);
/// Inverse of frobenius(); throws std::invalid_argument on malformed input.
Partition from_frobenius(const FrobeniusCoordinates& coords);

/// True iff inner is contained in outer and outer/inner has at most one
/// cell per column (outer_1 >= inner_1 >= outer_2 >= inner_2 >= ...).
bool horizontal_strip(const Partition& outer, const Partition& inner);

/// Every outer with outer/inner a horizontal strip of `cells` cells,
/// in canonical order.
std::vector<Partition> add_horizontal_strip(const Partition& inner, int cells);

/// The partition obtained by deleting the first row.
Partition remove_first_row(const Partition& p);
/// (n - |p|, p_1, p_2, ...); throws std::invalid_argument if n - |p| < p_1.
Partition prepend_row(const Partition& p, int n);

/// Comma form "3,1,1"; the empty partition renders as "0".
std::string to_string(const Partition& p);
/// Compact exponential form used in tables: "(21^2)", "(1^3)", "(2,10)", "∅".
std::string to_compact_string(const Partition& p);

/// Accepts comma lists ("3,1,1"), exponential tokens ("1^2,3") and mixes of
/// both; "0", "" and "∅" denote the empty partition. Throws
/// std::invalid_argument on malformed text.
Partition parse_partition(std::string_view text);

}  // namespace tensordecomp

template <>
struct std::hash<tensordecomp::Partition> : tensordecomp::PartitionHash {};
