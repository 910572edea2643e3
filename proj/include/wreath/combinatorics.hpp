#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "wreath/permutation.hpp"

namespace wreath {

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<std::size_t> parts;

  std::size_t size() const;
  std::size_t length() const { return parts.size(); }
  /// Number of parts equal to i.
  std::size_t multiplicity(std::size_t i) const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Largest l accepted by the fixed-subset formula (sums over all of P(l)).
inline constexpr std::size_t kMaxFormulaEll = 64;

mpz_class binomial(std::uint64_t n, std::uint64_t k);
mpz_class factorial(std::uint64_t n);

/// p(n), by Euler's pentagonal recurrence.
mpz_class partition_count(std::size_t n);
/// Partitions in reverse-lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partition_enum(std::size_t n);
void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& fn);

/// Unsigned Stirling number of the first kind: permutations of m points
/// with exactly j cycles.
mpz_class stirling_first(std::size_t j, std::size_t m);

/// C(n+k-1, k-1).
mpz_class weak_composition_count(std::uint64_t n, std::uint64_t k);

/// Number of l-subsets fixed by a permutation of the given cycle type:
/// sum over partitions lambda of l of prod_i C(alpha_i, lambda_i).
mpz_class fix_subsets_formula(const CycleType& ct, std::size_t ell);

/// Number of k-tuples of partitions with total size n.
mpz_class tuples_of_partitions_count(std::uint64_t k, std::uint64_t n);

/// |{x in S_m : x has cycle type ct}| = m! / prod_i (i^alpha_i alpha_i!).
mpz_class class_size_in_symmetric(const CycleType& ct);

/// Cycle type of a partition viewed as a permutation's cycle lengths.
CycleType cycle_type_of(const Partition& p);
/// A permutation of degree p.size() with cycle lengths p.parts.
Permutation permutation_of_type(const Partition& p);

}  // namespace wreath
