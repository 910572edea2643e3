#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "wreath/kernels.hpp"
#include "wreath/perm_group.hpp"
#include "wreath/quantity.hpp"

namespace wreath {

/// One evaluated inequality: lhs `relation` rhs.
struct BoundReport {
  std::string name;
  std::optional<Quantity> lhs;
  std::optional<Quantity> rhs;
  std::string relation;            // "<", "<=", "=", ">=", ">"
  Verdict holds = Verdict::not_evaluated;
  std::string mode = "exact";      // "exact" or "float"
  bool asymptotic = false;         // guaranteed only for large parameters
  std::string e_source;            // empty when the bound does not involve e
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string note;
};

/// Compares and fills holds and mode.
void judge(BoundReport& r);

enum class ESource { automatic, exact_lattice, power_third, power_linear };
const char* to_string(ESource s);
ESource parse_e_source(const std::string& s);

/// e(H) under the given source with the label actually used. `automatic`
/// takes the exact lattice maximum when |H| fits budget.max_lattice_order,
/// else 5^(n/3).
std::pair<Quantity, std::string> e_value(const PermGroup& h, ESource source);

/// k(G) < k^n/|H| + 2 e k^max_sigma.
BoundReport class_count_upper_bound(const PermGroup& h, std::uint32_t k, ESource source = ESource::automatic);

/// Structural and counting predicates on (H, k).
std::vector<BoundReport> predicates(const PermGroup& h, std::uint32_t k);

/// Orbit count of S_m on colorings of l-subsets against
/// 2 max{k^(7/8 C(m,l)), (m!)^-0.58 k^C(m,l)}. Needs 1 <= l < m/2.
BoundReport subset_orbit_bound(std::size_t m, std::size_t ell, std::uint32_t k);

/// k(G) for the product family against 5^(mt) (2^t n(S_m,B_1)^t + k^(2n/3)).
BoundReport product_class_bound(std::size_t m, std::size_t ell, std::size_t t, std::uint32_t k);

/// Orbits of (S_m)^t on colorings of Omega^t against n(S_m, B_1)^t.
BoundReport coordinatewise_orbit_check(std::size_t m, std::size_t ell, std::size_t t, std::uint32_t k);

/// max over pi in S_m of 2 sigma'(pi) - |fix(pi)| against C(m,l).
BoundReport subset_cycle_bound(std::size_t m, std::size_t ell);

struct LargeBaseParams {
  std::size_t m, ell, t;
  friend bool operator==(const LargeBaseParams&, const LargeBaseParams&) = default;
};
/// From family metadata only: subsets, subsets-alt and product families with
/// m >= 5 and 1 <= l < m/2.
std::optional<LargeBaseParams> large_base_match(const PermGroup& h);

struct SemiprimitiveReport {
  std::size_t r = 0;
  std::size_t degree = 0;
  std::vector<std::vector<Point>> blocks;
  mpz_class order, kernel_order, quotient_order;
  bool kernel_semiregular = false;
  std::optional<mpz_class> e_kernel;  // max k(I) over inertia groups meeting K trivially
  std::vector<BoundReport> reports;
};

/// Needs H transitive and imprimitive (InvalidArgument) and semiprimitive
/// (NotSemiprimitive).
SemiprimitiveReport semiprimitive_report(const PermGroup& h, std::uint32_t k);

/// Rows for H = C_2 wr C_m of degree 2m, k = 2.
struct ScanRow {
  std::string param;
  std::uint32_t k = 2;
  std::size_t n = 0;
  mpz_class order;
  std::optional<mpz_class> value;  // absent when the count was over budget
  Quantity bound;
  Verdict holds = Verdict::not_evaluated;
  std::string mode = "exact";
};
std::vector<ScanRow> counterexample_scan(std::size_t m_first, std::size_t m_last,
                                         const Budget& budget = {});
std::string scan_csv(const std::vector<ScanRow>& rows);

/// Fixed l-subsets against (3/4) C(m,l) for every cycle type with
/// sigma <= 3m/4 and 1 <= l < m/2.
struct FixProbeRow {
  std::size_t m = 0;
  std::uint64_t checked = 0;
  std::uint64_t counterexamples = 0;
};
struct FixProbe {
  std::vector<FixProbeRow> rows;
  /// Smallest m such that no m' in [m, m_last] has a counterexample.
  std::size_t clean_from = 0;
};
FixProbe fixed_subset_probe(std::size_t m_last);

}  // namespace wreath
