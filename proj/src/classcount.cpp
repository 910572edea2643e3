#include "wreath/classcount.hpp"

#include <algorithm>
#include <cmath>

#include "union_find.hpp"
#include "wreath/actions.hpp"
#include "wreath/combinatorics.hpp"
#include "wreath/structure.hpp"

namespace wreath {

const char* to_string(CountMethod m) {
  switch (m) {
    case CountMethod::clifford: return "clifford";
    case CountMethod::brute: return "brute";
    case CountMethod::burnside_lower: return "burnside-lower";
    case CountMethod::closed_form: return "closed-form";
  }
  return "?";
}

mpz_class pow_ui(std::uint64_t base, std::uint64_t exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

namespace {

using Clock = std::chrono::steady_clock;

void require_k(std::uint32_t k) {
  if (k < 1) throw InvalidArgument("k must be >= 1");
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// Partition sums stay cheap up to this many classes.
constexpr unsigned long kMaxShortcutClasses = 2'000'000;

std::optional<std::vector<mpz_class>> family_sigma_distribution(const PermGroup& h) {
  const auto& fam = h.family();
  if (!fam) return std::nullopt;
  const auto& name = fam->name;
  const auto& p = fam->params;
  std::vector<mpz_class> dist(h.degree() + 1, 0);

  if (name == "trivial") {
    dist[h.degree()] = 1;
    return dist;
  }
  if (name == "cyclic") {
    const std::uint64_t n = p[0];
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) dist[d] = static_cast<unsigned long>(euler_phi(n / d));
    return dist;
  }
  const bool natural = name == "symmetric" || name == "alternating";
  const bool on_subsets = name == "subsets" || name == "subsets-alt";
  if (!natural && !on_subsets) return std::nullopt;
  const std::size_t m = p[0];
  if (partition_count(m) > kMaxShortcutClasses) return std::nullopt;
  const bool even_only = name == "alternating" || name == "subsets-alt";
  for_each_partition(m, [&](const Partition& lambda) {
    if (even_only && (m - lambda.length()) % 2 != 0) return;
    const auto size = class_size_in_symmetric(cycle_type_of(lambda));
    const std::size_t s = natural ? lambda.length()
                                  : sigma_prime(permutation_of_type(lambda), p[1], h.budget());
    dist[s] += size;
  });
  return dist;
}

}  // namespace

std::vector<mpz_class> sigma_distribution(const PermGroup& h, Exec exec) {
  if (auto dist = family_sigma_distribution(h)) return *dist;
  const auto hist = exec == Exec::parallel ? kernels::omp::sigma_histogram(h)
                                           : kernels::serial::sigma_histogram(h);
  std::vector<mpz_class> dist(hist.size());
  for (std::size_t i = 0; i < hist.size(); ++i) dist[i] = static_cast<unsigned long>(hist[i]);
  return dist;
}

mpz_class burnside_orbit_count(const PermGroup& h, std::uint32_t k, Exec exec) {
  require_k(k);
  const auto dist = sigma_distribution(h, exec);
  mpz_class sum = 0, order = 0;
  for (std::size_t s = 0; s < dist.size(); ++s) {
    if (dist[s] == 0) continue;
    sum += dist[s] * pow_ui(k, s);
    order += dist[s];
  }
  if (!mpz_divisible_p(sum.get_mpz_t(), order.get_mpz_t()))
    throw DivisibilityViolation("Burnside sum " + sum.get_str() + " not divisible by |H| = " +
                                order.get_str());
  return sum / order;
}

OrbitCensus orbit_census(const PermGroup& h, std::uint32_t k, Exec exec) {
  require_k(k);
  const kernels::ColoringAction action(h, k);
  if (action.space() <= h.budget().max_coloring_space) return kernels::serial::visited_census(action);
  return exec == Exec::parallel ? kernels::omp::lexmin_scan(action)
                                : kernels::serial::lexmin_scan(action);
}

CountResult clifford_count(const PermGroup& h, std::uint32_t k, Exec exec) {
  require_k(k);
  const auto start = Clock::now();
  CountResult r;
  r.k = k;
  r.degree = h.degree();
  r.group = h;
  r.method = CountMethod::clifford;
  if (h.is_trivial()) {
    // every stabilizer is trivial: one class per coloring
    r.order = 1;
    r.value = pow_ui(k, h.degree());
    r.orbit_count = r.value;
    r.detail = "trivial-top";
  } else {
    auto census = orbit_census(h, k, exec);
    if (exec == Exec::parallel)
      kernels::omp::fill_class_counts(h, census.stabilizers);
    else
      kernels::serial::fill_class_counts(h, census.stabilizers);
    r.order = static_cast<unsigned long>(census.group_order);
    r.value = 0;
    for (const auto& s : census.stabilizers) r.value += s.class_count * static_cast<unsigned long>(s.orbits);
    r.orbit_count = static_cast<unsigned long>(census.total_orbits);
    r.detail = census.mode == OrbitCensus::Mode::visited_table ? "visited-table" : "lexmin-scan";
  }
  r.elapsed = Clock::now() - start;
  return r;
}

CountResult brute_force_count(std::uint32_t k, const PermGroup& h) {
  require_k(k);
  const auto start = Clock::now();
  const auto w = build_wreath_group(k, h, h.budget());
  std::vector<std::pair<WreathElement, WreathElement>> conj;
  for (auto& g : w.generators()) {
    auto inv = w.inverse(g);
    conj.emplace_back(std::move(g), std::move(inv));
  }
  detail::UnionFind uf(w.order());
  for (std::uint64_t i = 0; i < w.order(); ++i) {
    const auto x = w.element(i);
    for (const auto& [g, ginv] : conj) uf.unite(i, w.index_of(w.multiply(w.multiply(g, x), ginv)));
  }
  CountResult r;
  r.k = k;
  r.degree = h.degree();
  r.order = static_cast<unsigned long>(h.size());
  r.method = CountMethod::brute;
  r.detail = "union-find on " + std::to_string(w.order()) + " elements";
  r.value = static_cast<unsigned long>(uf.components());
  r.group = h;
  r.elapsed = Clock::now() - start;
  return r;
}

CountResult burnside_lower_count(const PermGroup& h, std::uint32_t k) {
  const auto start = Clock::now();
  CountResult r;
  r.k = k;
  r.degree = h.degree();
  r.order = h.order();
  r.method = CountMethod::burnside_lower;
  r.detail = "orbit count, a lower bound";
  r.value = burnside_orbit_count(h, k);
  r.orbit_count = r.value;
  r.group = h;
  r.elapsed = Clock::now() - start;
  return r;
}

CyclicFormula cyclic_formula(std::uint32_t k, std::uint64_t n) {
  require_k(k);
  if (n < 2) throw InvalidArgument("cyclic formula needs n >= 2");
  const mpz_class kn = pow_ui(k, n);
  const mpz_class linear = mpz_class(static_cast<unsigned long>(k)) * static_cast<unsigned long>(n);
  CyclicFormula f;
  f.upper = kn - k + linear;
  if (is_prime(n)) f.exact = (kn - k) / static_cast<unsigned long>(n) + linear;
  return f;
}

mpz_class symmetric_closed_form(std::uint32_t k, std::uint64_t n) {
  require_k(k);
  return tuples_of_partitions_count(k, n);
}

std::optional<CountResult> closed_form_count(const PermGroup& h, std::uint32_t k) {
  require_k(k);
  const auto& fam = h.family();
  if (!fam) return std::nullopt;
  const auto start = Clock::now();
  CountResult r;
  r.k = k;
  r.degree = h.degree();
  r.order = h.order();
  r.method = CountMethod::closed_form;
  r.group = h;
  const std::uint64_t n = h.degree();
  if (fam->name == "trivial" || (fam->name == "cyclic" && n == 1)) {
    r.value = pow_ui(k, n);
    r.orbit_count = r.value;
    r.detail = "trivial-top";
  } else if (fam->name == "symmetric") {
    r.value = symmetric_closed_form(k, n);
    r.orbit_count = weak_composition_count(n, k);
    r.detail = "partition-tuples";
  } else if (fam->name == "cyclic" && is_prime(n)) {
    r.value = *cyclic_formula(k, n).exact;
    r.orbit_count = burnside_orbit_count(h, k);
    r.detail = "cyclic-prime";
  } else {
    return std::nullopt;
  }
  r.elapsed = Clock::now() - start;
  return r;
}

OrbitStats nonregular_orbit_stats(const PermGroup& h, std::uint32_t k, Exec exec) {
  require_k(k);
  OrbitStats st;
  const mpz_class space = pow_ui(k, h.degree());
  if (h.is_trivial()) {
    st.total_orbits = space;
    return st;
  }
  auto census = orbit_census(h, k, exec);
  std::vector<StabilizerClass> small;
  for (auto& s : census.stabilizers)
    if (s.members.size() > 1) small.push_back(std::move(s));
  if (exec == Exec::parallel)
    kernels::omp::fill_class_counts(h, small);
  else
    kernels::serial::fill_class_counts(h, small);

  const auto order = static_cast<unsigned long>(census.group_order);
  st.total_orbits = static_cast<unsigned long>(census.total_orbits);
  for (const auto& s : small) {
    st.nonregular_orbits += static_cast<unsigned long>(s.orbits);
    st.nonregular_class_sum += s.class_count * static_cast<unsigned long>(s.orbits);
  }
  st.delta_size = space - order * (st.total_orbits - st.nonregular_orbits);
  st.max_sigma = max_nonidentity_sigma(h);

  const mpz_class cap = pow_ui(k, st.max_sigma);
  if (!(st.nonregular_orbits < 2 * cap))
    throw Error("non-regular orbit count " + st.nonregular_orbits.get_str() + " reaches 2k^max_sigma");
  if (st.delta_size > (order - 1) * cap)
    throw Error("non-regular colorings " + st.delta_size.get_str() + " exceed (|H|-1)k^max_sigma");
  return st;
}

mpz_class orbit_lower_bound(const PermGroup& h, std::uint32_t k) {
  require_k(k);
  mpz_class q;
  const mpz_class order = h.order();
  mpz_cdiv_q(q.get_mpz_t(), pow_ui(k, h.degree()).get_mpz_t(), order.get_mpz_t());
  return q;
}

CountResult auto_count(const PermGroup& h, std::uint32_t k, Exec exec) {
  require_k(k);
  if (auto cf = closed_form_count(h, k)) return *cf;
  std::string why;
  try {
    return clifford_count(h, k, exec);
  } catch (const BudgetExceeded& e) {
    why = std::string("clifford: ") + e.what();
  }
  try {
    return brute_force_count(k, h);
  } catch (const BudgetExceeded& e) {
    why += std::string("; brute: ") + e.what();
  }

  const std::size_t n = h.degree();
  mpz_class lower = orbit_lower_bound(h, k);
  try {
    lower = std::max(lower, burnside_orbit_count(h, k, exec));
  } catch (const BudgetExceeded&) {
  }
  std::size_t max_sigma = n > 1 ? n - 1 : 1;
  try {
    max_sigma = max_nonidentity_sigma(h);
  } catch (const BudgetExceeded&) {
  }
  Quantity e;
  std::string source;
  try {
    if (h.order() > static_cast<unsigned long>(h.budget().max_lattice_order))
      throw BudgetExceeded("max_lattice_order", "subgroup lattice too large");
    e = max_subgroup_class_count(h);
    source = "exact-lattice";
  } catch (const BudgetExceeded&) {
    e = n % 3 == 0 ? Quantity(pow_ui(5, n / 3)) : Quantity::approx_log2(static_cast<double>(n) / 3.0 * std::log2(5.0));
    source = "bound-5^(n/3)";
  }
  const Quantity upper = Quantity(mpq_class(pow_ui(k, n), h.order())) +
                         Quantity(mpz_class(2 * pow_ui(k, max_sigma))) * e;
  throw Infeasible("no exact method fits the budgets (" + why + ")", lower, upper, source);
}

}  // namespace wreath
