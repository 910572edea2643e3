#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "wreath/perm_group.hpp"

namespace wreath {

struct StructureReport {
  bool transitive = false;
  bool semiregular = false;
  bool primitive = false;
  bool semiprimitive = false;
  std::size_t normal_subgroup_count = 0;
};

struct NumericInvariants {
  std::size_t mu = 0;         // minimal degree
  std::size_t b = 0;          // minimal base size
  std::size_t max_sigma = 0;  // max cycle count over nonidentity elements (alpha(H)*n)
  std::optional<mpz_class> e; // max k(T) over subgroups T, when computed
};

bool is_transitive(const PermGroup& g);
/// Every nonidentity element is fixed-point-free.
bool is_semiregular(const PermGroup& g);
bool is_semiregular(const PermGroup& parent, std::span<const std::uint32_t> members);
bool is_transitive(const PermGroup& parent, std::span<const std::uint32_t> members);

/// Smallest block of imprimitivity containing `seed` (union-find closure
/// under the generators). Returned sorted.
std::vector<Point> minimal_block(const PermGroup& g, std::span<const Point> seed);

/// Every block containing point 0, including {0} and the whole set,
/// sorted by (size, lexicographic).
std::vector<std::vector<Point>> blocks_containing_zero(const PermGroup& g);

bool is_primitive(const PermGroup& g);

/// All normal subgroups, built from unions of conjugacy classes.
/// BudgetExceeded when |G| > budget.max_normal_order.
std::vector<ElementSet> normal_subgroups(const PermGroup& g);

/// All subgroups. BudgetExceeded when |G| > budget.max_lattice_order.
std::vector<ElementSet> all_subgroups(const PermGroup& g);

StructureReport structure_classify(const PermGroup& g);

std::size_t minimal_degree(const PermGroup& g);
std::size_t minimal_base_size(const PermGroup& g);
std::size_t max_nonidentity_sigma(const PermGroup& g);
mpz_class max_subgroup_class_count(const PermGroup& g);

/// Requires a nontrivial group. e is filled only when want_e.
NumericInvariants numeric_invariants(const PermGroup& g, bool want_e);

bool contains_transposition(const PermGroup& g);

}  // namespace wreath
