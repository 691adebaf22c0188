#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "tensordecomp/partition.hpp"

using namespace tensordecomp;

TEST_CASE("enumerate lists partitions once in reverse-lexicographic order") {
  CHECK(enumerate(0) == std::vector<Partition>{Partition{}});
  CHECK(enumerate(4) ==
        std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(oracles::partition_count(8) == 22);
  CHECK(enumerate(8).size() == 22);
  for (int n = 0; n <= 12; ++n) {
    const auto parts = enumerate(n);
    CHECK(static_cast<std::int64_t>(parts.size()) == oracles::partition_count(n));
    CHECK(std::is_sorted(parts.begin(), parts.end()));
    CHECK(std::adjacent_find(parts.begin(), parts.end()) == parts.end());
    for (const auto& p : parts) CHECK(p.size() == n);
  }
  CHECK_THROWS_AS(enumerate(-1), std::invalid_argument);
}

TEST_CASE("construction enforces canonical form") {
  CHECK(Partition{3, 1, 0, 0} == Partition{3, 1});
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK(Partition::from_parts({1, 3, 1}) == Partition{3, 1, 1});
  const std::vector<int> m{2, 0, 1};
  CHECK(Partition::from_multiplicities(m) == Partition{3, 1, 1});
  const Partition p{3, 3, 2, 1, 1, 1};
  CHECK(p.multiplicity(1) == 3);
  CHECK(p.multiplicity(4) == 0);
  int weighted = 0, count = 0;
  const auto mults = p.multiplicities();
  for (std::size_t i = 0; i < mults.size(); ++i) {
    weighted += static_cast<int>(i + 1) * mults[i];
    count += mults[i];
  }
  CHECK(weighted == p.size());
  CHECK(count == p.length());
}

TEST_CASE("dominance") {
  CHECK(dominates({3}, {2, 1}));
  CHECK_FALSE(dominates({2, 1}, {3}));
  CHECK(dominates({2, 2}, {2, 1, 1}));
  CHECK_THROWS_AS(dominates({2}, {2, 1}), std::invalid_argument);

  for (int n = 0; n <= 8; ++n) {
    const auto ps = enumerate(n);
    for (const auto& a : ps) {
      CHECK(dominates(a, a));
      for (const auto& b : ps) {
        if (a != b && dominates(a, b)) CHECK_FALSE(dominates(b, a));
        // Dominance refines the canonical order.
        if (dominates(a, b)) CHECK(a <= b);
        for (const auto& c : ps) {
          if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
        }
      }
    }
  }
}

TEST_CASE("conjugation") {
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate({}) == Partition{});
  CHECK(conjugate({2, 2}) == Partition{2, 2});
  for (int n = 0; n <= 10; ++n) {
    for (const auto& p : enumerate(n)) CHECK(conjugate(conjugate(p)) == p);
  }
  for (int n = 0; n <= 7; ++n) {
    const auto ps = enumerate(n);
    for (const auto& a : ps) {
      for (const auto& b : ps) CHECK(dominates(a, b) == dominates(conjugate(b), conjugate(a)));
    }
  }
}

TEST_CASE("dim is the number of standard tableaux") {
  CHECK(dim({2, 1}) == 2);
  CHECK(dim({3, 1}) == 3);
  CHECK(dim({5}) == 1);
  CHECK(dim({}) == 1);
  for (int n = 0; n <= 9; ++n) {
    BigInt squares = 0;
    for (const auto& p : enumerate(n)) {
      CHECK(dim(p) == BigInt(static_cast<long>(oracles::count_syt(p.parts()))));
      squares += dim(p) * dim(p);
    }
    CHECK(squares == factorial(n));
  }
}

TEST_CASE("Frobenius coordinates") {
  CHECK(frobenius({1}) == FrobeniusCoordinates{{0}, {0}});
  CHECK(frobenius({2, 1, 1}) == FrobeniusCoordinates{{1}, {2}});
  // Conjugate of (3,3,1) is (3,2,2): legs are 3-1 and 2-2.
  CHECK(frobenius({3, 3, 1}) == FrobeniusCoordinates{{2, 1}, {2, 0}});
  CHECK(frobenius({}) == FrobeniusCoordinates{});
  for (int n = 0; n <= 10; ++n) {
    for (const auto& p : enumerate(n)) {
      const auto f = frobenius(p);
      const auto [arms, legs] = oracles::frobenius_by_cells(p.parts());
      CHECK(f.arms == arms);
      CHECK(f.legs == legs);
      CHECK(from_frobenius(f) == p);
    }
  }
  CHECK_THROWS_AS(from_frobenius({{1, 2}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(from_frobenius({{1}, {}}), std::invalid_argument);
}

TEST_CASE("horizontal strips") {
  CHECK(horizontal_strip({3, 1}, {2}));
  CHECK_FALSE(horizontal_strip({2, 2}, {1}));
  CHECK(horizontal_strip({2, 1}, {2, 1}));
  CHECK_FALSE(horizontal_strip({2}, {2, 1}));

  // add_horizontal_strip agrees with filtering all partitions by the predicate.
  for (int m = 0; m <= 5; ++m) {
    for (const auto& inner : enumerate(m)) {
      for (int r = 0; r <= 5; ++r) {
        std::vector<Partition> brute;
        for (const auto& outer : enumerate(m + r)) {
          if (horizontal_strip(outer, inner)) brute.push_back(outer);
        }
        CHECK(add_horizontal_strip(inner, r) == brute);
      }
    }
  }
}

TEST_CASE("first-row helpers") {
  CHECK(remove_first_row({4, 2, 1}) == Partition{2, 1});
  CHECK(remove_first_row({}) == Partition{});
  CHECK(prepend_row({2, 1}, 7) == Partition{4, 2, 1});
  CHECK_THROWS_AS(prepend_row({2, 1}, 4), std::invalid_argument);
}

TEST_CASE("text syntax") {
  CHECK(parse_partition("3,1,1") == Partition{3, 1, 1});
  CHECK(parse_partition("1^2,3") == Partition{3, 1, 1});
  CHECK(parse_partition("0") == Partition{});
  CHECK(parse_partition("") == Partition{});
  CHECK(parse_partition("∅") == Partition{});
  CHECK(parse_partition(" 2, 2 ") == Partition{2, 2});
  CHECK(parse_partition("(2,1^2)") == Partition{2, 1, 1});
  CHECK_THROWS_AS(parse_partition("3,a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("3,,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("2,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("-1"), std::invalid_argument);

  CHECK(to_string(Partition{3, 1, 1}) == "3,1,1");
  CHECK(to_string(Partition{}) == "0");
  CHECK(to_compact_string(Partition{2, 1, 1}) == "(21^2)");
  CHECK(to_compact_string(Partition{1, 1, 1}) == "(1^3)");
  CHECK(to_compact_string(Partition{}) == "∅");
  CHECK(to_compact_string(Partition{10, 2, 2}) == "(10,2^2)");

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Partition p = oracles::random_partition(1 + trial % 9, rng);
    CHECK(parse_partition(to_string(p)) == p);
  }
}
