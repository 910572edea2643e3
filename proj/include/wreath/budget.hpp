#pragma once

#include <cstdint>

namespace wreath {

/// Size limits shared by every enumeration in the library.
struct Budget {
  std::uint64_t max_group_order = 1'000'000;
  // Entries in the visited table of the orbit BFS (k^n).
  std::uint64_t max_coloring_space = std::uint64_t{1} << 27;
  // Colorings visited by the memory-free lex-minimality scan.
  std::uint64_t max_scan_colorings = std::uint64_t{1} << 32;
  std::uint64_t max_lift_degree = 100'000;
  std::uint64_t max_brute_order = 1'000'000;
  std::uint64_t max_normal_order = 100'000;
  std::uint64_t max_lattice_order = 2'000;
  // Search nodes for the minimal-base IDDFS.
  std::uint64_t max_base_nodes = 50'000'000;

  static Budget defaults() { return {}; }
  /// Defaults overridden by WREATHCOUNT_MAX_ORDER, WREATHCOUNT_MAX_COLORINGS,
  /// WREATHCOUNT_MAX_LIFT and WREATHCOUNT_MAX_BRUTE when set.
  static Budget from_env();
};

}  // namespace wreath
