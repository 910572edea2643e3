#pragma once

// Data-parallel inner loops. Every kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::omp with identical,
// deterministic output; tests hold the two against each other and
// bench/ compares their speed.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "wreath/perm_group.hpp"

namespace wreath {

enum class Exec { serial, parallel };

/// Inertia (coloring-stabilizer) subgroups found by an orbit census, one
/// entry per distinct subgroup.
struct StabilizerClass {
  ElementSet members;                  // indices into H
  std::uint64_t orbits = 0;            // orbits with exactly this stabilizer
  std::uint64_t first_representative = 0;
  mpz_class class_count = 0;           // k(T), filled by fill_class_counts
};

/// One pass over {0..k-1}^n: the orbits of H, their lex-smallest
/// representatives' stabilizers, aggregated by stabilizer.
struct OrbitCensus {
  enum class Mode { visited_table, lexmin_scan };
  Mode mode = Mode::visited_table;
  std::uint64_t space = 0;             // k^n
  std::uint64_t total_orbits = 0;
  std::uint64_t group_order = 0;
  std::vector<StabilizerClass> stabilizers;  // ordered by first_representative
};

namespace kernels {

/// H acting on colorings encoded as integers (position 0 most significant):
/// (h.c)(h(j)) = c(j).
class ColoringAction {
public:
  ColoringAction(const PermGroup& h, std::uint32_t k);

  std::size_t degree() const noexcept { return n_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint64_t space() const noexcept { return space_; }
  const PermGroup& group() const noexcept { return h_; }

  void decode(std::uint64_t code, std::span<std::uint32_t> digits) const;
  std::uint64_t apply(const Permutation& h, std::span<const std::uint32_t> digits) const;

private:
  PermGroup h_;
  std::uint32_t k_;
  std::size_t n_;
  std::uint64_t space_;
  std::vector<std::uint64_t> place_;  // place_[i] = k^(n-1-i)
};

/// Merges per-chunk stabilizer tallies; order by first representative.
std::vector<StabilizerClass> merge_stabilizers(std::vector<std::vector<StabilizerClass>> parts);

namespace serial {
/// hist[s] = number of elements with exactly s cycles.
std::vector<std::uint64_t> sigma_histogram(const PermGroup& h);
/// Visits every coloring; a coloring is a representative iff no element maps
/// it to a smaller code.
OrbitCensus lexmin_scan(const ColoringAction& action);
/// BFS over the coloring space with a visited bitmap (serial only).
OrbitCensus visited_census(const ColoringAction& action);
void fill_class_counts(const PermGroup& h, std::vector<StabilizerClass>& stabilizers);
}  // namespace serial

namespace omp {
std::vector<std::uint64_t> sigma_histogram(const PermGroup& h);
OrbitCensus lexmin_scan(const ColoringAction& action);
void fill_class_counts(const PermGroup& h, std::vector<StabilizerClass>& stabilizers);
}  // namespace omp

/// Exhaustive fixed-subset check over S_m: for every permutation and every
/// l in 1..m, the directly counted fixed l-subsets against the cycle-type
/// formula. m <= 20 (subsets are bitmasks).
struct FixSubsetTally {
  std::uint64_t permutations = 0;
  std::uint64_t checks = 0;
  std::uint64_t mismatches = 0;
};
namespace serial {
FixSubsetTally fix_subset_exhaustive(std::size_t m);
}
namespace omp {
FixSubsetTally fix_subset_exhaustive(std::size_t m);
}

/// Per-l fixed-subset counts of one permutation by bitmask enumeration:
/// out[l] for l = 0..m.
void fix_subset_counts(const Permutation& p, std::vector<std::uint64_t>& out,
                       std::vector<std::uint32_t>& scratch);

int max_threads();
void set_threads(int n);

}  // namespace kernels
}  // namespace wreath
