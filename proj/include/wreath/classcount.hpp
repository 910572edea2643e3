#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wreath/errors.hpp"
#include "wreath/kernels.hpp"
#include "wreath/perm_group.hpp"
#include "wreath/quantity.hpp"

namespace wreath {

enum class CountMethod { clifford, brute, burnside_lower, closed_form };
const char* to_string(CountMethod m);

/// k(X wr H) for an X with k conjugacy classes.
struct CountResult {
  std::uint32_t k = 0;
  std::size_t degree = 0;
  mpz_class order;                       // |H|
  CountMethod method = CountMethod::clifford;
  std::string detail;                    // which closed form, census mode, ...
  mpz_class value;
  std::optional<mpz_class> orbit_count;  // H-orbits on colorings
  std::chrono::duration<double> elapsed{};
  PermGroup group;
};

struct OrbitStats {
  mpz_class total_orbits;
  mpz_class nonregular_orbits;           // orbits smaller than |H|
  mpz_class delta_size;                  // colorings in non-regular orbits
  mpz_class nonregular_class_sum;        // sum of k(stabilizer) over non-regular orbits
  std::size_t max_sigma = 0;
};

/// No method fits the budgets. Carries what is still known about the count.
class Infeasible : public Error {
public:
  Infeasible(const std::string& what, mpz_class lower, Quantity upper, std::string upper_source)
      : Error(what), lower_(std::move(lower)), upper_(std::move(upper)),
        upper_source_(std::move(upper_source)) {}
  const mpz_class& lower() const noexcept { return lower_; }
  const Quantity& upper() const noexcept { return upper_; }
  const std::string& upper_source() const noexcept { return upper_source_; }

private:
  mpz_class lower_;
  Quantity upper_;
  std::string upper_source_;
};

mpz_class pow_ui(std::uint64_t base, std::uint64_t exp);

/// dist[s] = number of elements of H with exactly s cycles. Uses cycle-type
/// class sizes for the symmetric, alternating, cyclic, trivial and subset
/// families, so those never need materializing.
std::vector<mpz_class> sigma_distribution(const PermGroup& h, Exec exec = Exec::parallel);

/// Number of H-orbits on the k^n colorings: (1/|H|) sum_h k^sigma(h).
mpz_class burnside_orbit_count(const PermGroup& h, std::uint32_t k, Exec exec = Exec::parallel);

/// Orbits on colorings with their lex-smallest representatives' stabilizers.
/// Uses the visited-table BFS when k^n fits budget.max_coloring_space,
/// otherwise the lex-minimality scan.
OrbitCensus orbit_census(const PermGroup& h, std::uint32_t k, Exec exec = Exec::parallel);

/// Sum over orbit representatives of k(stabilizer).
CountResult clifford_count(const PermGroup& h, std::uint32_t k, Exec exec = Exec::parallel);

/// Conjugation orbits of the explicit group C_k wr H.
CountResult brute_force_count(std::uint32_t k, const PermGroup& h);

/// H-orbits on colorings, a lower bound for k(G).
CountResult burnside_lower_count(const PermGroup& h, std::uint32_t k);

struct CyclicFormula {
  std::optional<mpz_class> exact;  // present iff n is prime
  mpz_class upper;                 // k^n - k + kn
};
CyclicFormula cyclic_formula(std::uint32_t k, std::uint64_t n);

/// k(X wr S_n).
mpz_class symmetric_closed_form(std::uint32_t k, std::uint64_t n);

/// Closed form for H from its family metadata (symmetric, cyclic of prime
/// degree, trivial), or nullopt.
std::optional<CountResult> closed_form_count(const PermGroup& h, std::uint32_t k);

/// Throws Error if the non-regular orbit bounds fail (a bug if it happens).
OrbitStats nonregular_orbit_stats(const PermGroup& h, std::uint32_t k, Exec exec = Exec::parallel);

/// ceil(k^n / |H|).
mpz_class orbit_lower_bound(const PermGroup& h, std::uint32_t k);

/// Closed form, then clifford, then brute force. Throws Infeasible with the
/// bracket [max(ceil(k^n/|H|), orbit count), k^n/|H| + 2 e k^max_sigma].
CountResult auto_count(const PermGroup& h, std::uint32_t k, Exec exec = Exec::parallel);

}  // namespace wreath
