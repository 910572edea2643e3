#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "wreath/classcount.hpp"
#include "wreath/combinatorics.hpp"

using namespace wreath;

TEST_CASE("partition counts") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(1) == 1);
  CHECK(partition_count(5) == 7);
  CHECK(partition_count(10) == 42);
  CHECK(partition_count(100) == mpz_class("190569292"));
  for (std::size_t n = 0; n <= 30; ++n) {
    CHECK(partition_count(n) == oracle::partitions_by_recursion(n, n));
    CHECK(partition_count(n) == partition_enum(n).size());
  }
}

TEST_CASE("partition enumeration order") {
  const auto ps = partition_enum(4);
  REQUIRE(ps.size() == 5);
  CHECK(ps[0].parts == std::vector<std::size_t>{4});
  CHECK(ps[1].parts == std::vector<std::size_t>{3, 1});
  CHECK(ps[2].parts == std::vector<std::size_t>{2, 2});
  CHECK(ps[4].parts == std::vector<std::size_t>{1, 1, 1, 1});
  for (const auto& p : partition_enum(9)) {
    CHECK(std::is_sorted(p.parts.rbegin(), p.parts.rend()));
    CHECK(p.size() == 9);
  }
}

TEST_CASE("stirling numbers of the first kind") {
  CHECK(stirling_first(0, 0) == 1);
  CHECK(stirling_first(1, 3) == 2);
  CHECK(stirling_first(2, 3) == 3);
  CHECK(stirling_first(3, 3) == 1);
  CHECK(stirling_first(2, 4) == 11);
  CHECK(stirling_first(0, 4) == 0);
  for (std::size_t m = 1; m <= 8; ++m)
    for (std::size_t j = 0; j <= m; ++j) CHECK(stirling_first(j, m) == oracle::stirling_by_listing(j, m));
}

TEST_CASE("property: stirling recurrence and row sums up to 20") {
  for (std::size_t m = 0; m <= 20; ++m) {
    mpz_class row = 0;
    for (std::size_t j = 0; j <= m; ++j) row += stirling_first(j, m);
    CHECK(row == factorial(m));
    for (std::size_t j = 1; j <= m + 1; ++j)
      CHECK(stirling_first(j, m + 1) == mpz_class(m) * stirling_first(j, m) + stirling_first(j - 1, m));
  }
}

TEST_CASE("weak compositions") {
  CHECK(weak_composition_count(2, 2) == 3);
  CHECK(weak_composition_count(3, 3) == 10);
  CHECK(weak_composition_count(0, 4) == 1);
  for (std::size_t n = 0; n <= 6; ++n)
    for (std::size_t k = 1; k <= 4; ++k) CHECK(weak_composition_count(n, k) == oracle::weak_compositions_by_listing(n, k));
}

TEST_CASE("tuples of partitions") {
  CHECK(tuples_of_partitions_count(2, 2) == 5);
  CHECK(tuples_of_partitions_count(3, 2) == 9);
  CHECK(tuples_of_partitions_count(2, 3) == 10);
  for (std::size_t n = 0; n <= 12; ++n) CHECK(tuples_of_partitions_count(1, n) == partition_count(n));
  // two partitions with total n: sum_i p(i) p(n-i)
  for (std::size_t n = 0; n <= 12; ++n) {
    mpz_class s = 0;
    for (std::size_t i = 0; i <= n; ++i) s += partition_count(i) * partition_count(n - i);
    CHECK(tuples_of_partitions_count(2, n) == s);
  }
}

TEST_CASE("class sizes in symmetric groups") {
  CHECK(class_size_in_symmetric(parse_cycles("(1 2)", 4).cycle_type()) == 6);
  CHECK(class_size_in_symmetric(parse_cycles("(1 2 3 4)").cycle_type()) == 6);
  for (std::size_t m = 1; m <= 10; ++m) {
    mpz_class total = 0;
    for (const auto& p : partition_enum(m)) {
      total += class_size_in_symmetric(cycle_type_of(p));
      CHECK(permutation_of_type(p).cycle_type() == cycle_type_of(p));
    }
    CHECK(total == factorial(m));
  }
}

TEST_CASE("fixed subset formula examples") {
  CHECK(fix_subsets_formula(parse_cycles("(1 2)(3 4)").cycle_type(), 2) == 2);
  CHECK(fix_subsets_formula(Permutation::identity(5).cycle_type(), 2) == 10);
  CHECK(fix_subsets_formula(parse_cycles("(1 2 3)", 5).cycle_type(), 3) == 1);
}

TEST_CASE("property: fixed subset formula against listing, random permutations up to 14") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t m = 1 + rng() % 14;
    const auto p = testing_support::random_permutation(m, rng);
    const std::size_t ell = 1 + rng() % m;
    CHECK(fix_subsets_formula(p.cycle_type(), ell) == oracle::fixed_subsets_by_listing(testing_support::raw(p), ell));
  }
}

TEST_CASE("property: symmetric group orbit count is a weak composition count") {
  for (std::size_t m = 1; m <= 8; ++m)
    for (std::uint32_t k = 1; k <= 4; ++k) {
      mpz_class sum = 0;
      for (const auto& p : partition_enum(m)) sum += class_size_in_symmetric(cycle_type_of(p)) * pow_ui(k, p.length());
      CHECK(sum % factorial(m) == 0);
      CHECK(sum / factorial(m) == weak_composition_count(m, k));
    }
}
