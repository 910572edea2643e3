#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "wreath/budget.hpp"
#include "wreath/perm_group.hpp"
#include "wreath/permutation.hpp"

namespace wreath {

inline std::size_t sigma(const Permutation& p) { return p.sigma(); }
inline CycleType cycle_type(const Permutation& p) { return p.cycle_type(); }

/// Indexes the l-subsets of {0..m-1}. Subsets are ranked colexicographically;
/// when l > m/2 the complement is ranked instead, which keeps the ranking
/// tables proportional to the number of subsets.
class SubsetIndexer {
public:
  SubsetIndexer(std::size_t m, std::size_t ell, const Budget& budget = {});

  std::size_t m() const noexcept { return m_; }
  std::size_t ell() const noexcept { return ell_; }
  std::size_t size() const noexcept { return count_; }

  /// Members of the subset with the given rank, ascending.
  std::vector<Point> subset(std::size_t rank) const;
  /// Rank of a subset given as l distinct points (any order).
  std::size_t rank(std::span<const Point> members) const;

  /// Permutation of subset ranks induced by p (degree m).
  Permutation lift(const Permutation& p) const;

private:
  std::size_t key_rank(std::vector<Point>& key) const;  // key sorted in place
  std::size_t m_, ell_, key_size_;
  bool complement_;
  std::size_t count_;
  std::vector<std::uint64_t> binom_;  // (m+1) x (key_size+1), saturating
  std::vector<Point> keys_;           // count_ x key_size
};

/// Throws BudgetExceeded when C(m, l) > budget.max_lift_degree.
Permutation subsets_action_lift(const Permutation& p, std::size_t ell, const Budget& budget = {});
std::size_t sigma_prime(const Permutation& p, std::size_t ell, const Budget& budget = {});
/// Number of l-subsets S with p(S) = S, by enumeration (1 <= l <= m).
std::uint64_t fix_subsets_direct(const Permutation& p, std::size_t ell, const Budget& budget = {});

/// (x_1, ..., x_t) top acting on Omega^t, Omega the l-subsets of {0..m-1}:
/// coordinate i of the image is x_j(w_j) with j = top^-1(i). Points of
/// Omega^t are mixed-radix with coordinate 0 most significant.
Permutation product_action_build(std::span<const Permutation> coords, const Permutation& top,
                                 std::size_t m, std::size_t ell, const Budget& budget = {});
inline std::size_t gamma(const Permutation& x) { return x.sigma(); }

/// Element (v, h) of C_k wr H with v in (Z_k)^n and h given by its index in H.
struct WreathElement {
  std::vector<std::uint32_t> base;
  std::uint32_t top = 0;
  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// C_k wr H with (v,h)(w,g) = (v + h.w, hg), (h.w)_i = w_{h^-1(i)}.
/// Elements are numbered code(v) * |H| + index(h), code(v) big-endian base k.
class WreathGroup {
public:
  WreathGroup(std::uint32_t k, PermGroup top_group);

  std::uint32_t k() const noexcept { return k_; }
  std::size_t degree() const noexcept { return top_.degree(); }
  const PermGroup& top_group() const noexcept { return top_; }
  std::uint64_t order() const noexcept { return base_size_ * top_size_; }

  WreathElement element(std::uint64_t index) const;
  std::uint64_t index_of(const WreathElement& x) const;
  WreathElement identity() const;
  WreathElement multiply(const WreathElement& a, const WreathElement& b) const;
  WreathElement inverse(const WreathElement& a) const;
  /// Unit vectors at every coordinate plus (0, g) for each generator g of H.
  std::vector<WreathElement> generators() const;

private:
  std::uint32_t k_;
  PermGroup top_;
  std::uint64_t base_size_;
  std::uint64_t top_size_;
};

/// Throws BudgetExceeded when k^n |H| > budget.max_brute_order.
WreathGroup build_wreath_group(std::uint32_t k, const PermGroup& h, const Budget& budget = {});

/// Parses `name[:p1,p2,...]` and builds the group. Families:
///   trivial:n, cyclic:n, symmetric:n, alternating:n, dihedral:n,
///   subsets:m,l, subsets-alt:m,l, product:m,l,t, wreath-cyclic:m,
///   quaternion (regular Q8), gens:[d,](cycles),(cycles),...
/// Errors: UnknownFamily, InvalidArgument, ParseError.
PermGroup family(std::string_view spec, const Budget& budget = {});

struct BlockDecomposition {
  std::size_t r = 0;
  std::vector<std::vector<Point>> blocks;  // ordered by smallest point
  std::vector<std::uint32_t> block_of;     // point -> block
  ElementSet kernel_indices;               // indices into H
  PermGroup kernel;
  PermGroup quotient;                      // degree r
  /// Action of each element of H (by index) on the blocks.
  std::vector<Permutation> block_action;
};

/// Block system generated by a block, ordered by smallest point.
std::vector<std::vector<Point>> block_system(const PermGroup& h, std::span<const Point> block);

/// Every nontrivial block system (1 < block size < n), coarsest first.
std::vector<std::vector<std::vector<Point>>> all_block_systems(const PermGroup& h);

/// nullopt when H is primitive. Otherwise the block system with the fewest
/// blocks (r > 1), tie-broken by the lexicographically smallest block through
/// point 0; its quotient action is primitive. H must be transitive.
std::optional<BlockDecomposition> block_decomposition(const PermGroup& h);

}  // namespace wreath
