#include "wreath/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "wreath/actions.hpp"
#include "wreath/classcount.hpp"
#include "wreath/combinatorics.hpp"
#include "wreath/structure.hpp"

namespace wreath {

namespace {

std::string str(const mpz_class& z) { return z.get_str(); }
std::string str(std::uint64_t v) { return std::to_string(v); }

Quantity q(const mpz_class& z) { return Quantity(z); }
Quantity q(const mpq_class& v) { return Quantity(v); }
Quantity q(unsigned long v) { return Quantity(mpz_class(v)); }

// k^(a/2) for integer a: exact when a is even.
Quantity pow_half(std::uint64_t k, std::uint64_t a) {
  if (a % 2 == 0) return q(pow_ui(k, a / 2));
  return Quantity::approx_log2(static_cast<double>(a) / 2.0 * std::log2(static_cast<double>(k)));
}

// 5^(n/3): exact when 3 | n.
Quantity five_pow_third(std::uint64_t n) {
  if (n % 3 == 0) return q(pow_ui(5, n / 3));
  return Quantity::approx_log2(static_cast<double>(n) / 3.0 * std::log2(5.0));
}

BoundReport make(std::string name, std::string relation) {
  BoundReport r;
  r.name = std::move(name);
  r.relation = std::move(relation);
  return r;
}

// Runs fill(r); a budget refusal leaves the report unevaluated.
template <class Fn>
BoundReport guarded(BoundReport r, Fn&& fill) {
  try {
    fill(r);
  } catch (const BudgetExceeded& e) {
    r.holds = Verdict::not_evaluated;
    r.note = std::string("over budget: ") + e.what();
  } catch (const Infeasible& e) {
    r.holds = Verdict::not_evaluated;
    r.note = e.what();
  }
  return r;
}

// Orbits of h on colorings with `colors` colors, colors possibly huge.
mpz_class orbit_count_big(const PermGroup& h, const mpz_class& colors) {
  const auto dist = sigma_distribution(h);
  mpz_class sum = 0, order = 0;
  for (std::size_t s = 0; s < dist.size(); ++s) {
    if (dist[s] == 0) continue;
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), colors.get_mpz_t(), s);
    sum += dist[s] * p;
    order += dist[s];
  }
  if (!mpz_divisible_p(sum.get_mpz_t(), order.get_mpz_t()))
    throw DivisibilityViolation("orbit sum not divisible by the group order");
  return sum / order;
}

PermGroup subsets_group(std::size_t m, std::size_t ell) {
  return family("subsets:" + std::to_string(m) + "," + std::to_string(ell));
}

}  // namespace

void judge(BoundReport& r) {
  if (!r.lhs || !r.rhs) {
    r.holds = Verdict::not_evaluated;
    return;
  }
  r.mode = r.lhs->is_exact() && r.rhs->is_exact() ? "exact" : "float";
  const Relation rel = compare(*r.lhs, *r.rhs);
  if (rel == Relation::indeterminate) {
    r.holds = Verdict::indeterminate;
    return;
  }
  bool ok = false;
  if (r.relation == "<") ok = rel == Relation::less;
  else if (r.relation == "<=") ok = rel != Relation::greater;
  else if (r.relation == "=") ok = rel == Relation::equal;
  else if (r.relation == ">=") ok = rel != Relation::less;
  else if (r.relation == ">") ok = rel == Relation::greater;
  else throw InvalidArgument("unknown relation '" + r.relation + "'");
  r.holds = ok ? Verdict::holds : Verdict::fails;
}

const char* to_string(ESource s) {
  switch (s) {
    case ESource::automatic: return "auto";
    case ESource::exact_lattice: return "exact-lattice";
    case ESource::power_third: return "bound-5^(n/3)";
    case ESource::power_linear: return "bound-5^(n-1)";
  }
  return "?";
}

ESource parse_e_source(const std::string& s) {
  if (s == "auto") return ESource::automatic;
  if (s == "exact" || s == "exact-lattice") return ESource::exact_lattice;
  if (s == "n-third" || s == "bound-5^(n/3)") return ESource::power_third;
  if (s == "n-minus-1" || s == "bound-5^(n-1)") return ESource::power_linear;
  throw InvalidArgument("unknown e source '" + s + "'");
}

std::pair<Quantity, std::string> e_value(const PermGroup& h, ESource source) {
  const std::uint64_t n = h.degree();
  switch (source) {
    case ESource::exact_lattice:
      return {q(max_subgroup_class_count(h)), to_string(ESource::exact_lattice)};
    case ESource::power_third:
      return {five_pow_third(n), to_string(ESource::power_third)};
    case ESource::power_linear:
      return {q(pow_ui(5, n - 1)), to_string(ESource::power_linear)};
    case ESource::automatic:
      if (h.order() <= static_cast<unsigned long>(h.budget().max_lattice_order)) {
        try {
          return e_value(h, ESource::exact_lattice);
        } catch (const BudgetExceeded&) {
        }
      }
      return e_value(h, ESource::power_third);
  }
  throw InvalidArgument("bad e source");
}

BoundReport class_count_upper_bound(const PermGroup& h, std::uint32_t k, ESource source) {
  if (h.is_trivial()) throw InvalidArgument("class bound needs a nontrivial group");
  auto r = make("class-count-upper", "<");
  const std::uint64_t n = h.degree();
  const std::size_t ms = max_nonidentity_sigma(h);
  auto [e, label] = e_value(h, source);
  r.e_source = label;
  r.rhs = q(mpq_class(pow_ui(k, n), h.order())) + q(mpz_class(2 * pow_ui(k, ms))) * e;
  r.inputs = {{"k", str(k)}, {"n", str(n)}, {"order", str(h.order())},
              {"max_sigma", str(ms)}, {"e", e.to_string()}};
  return guarded(std::move(r), [&](BoundReport& rep) {
    rep.lhs = q(auto_count(h, k).value);
    judge(rep);
  });
}

std::vector<BoundReport> predicates(const PermGroup& h, std::uint32_t k) {
  const std::uint64_t n = h.degree();
  const mpz_class order = h.order();
  const std::vector<std::pair<std::string, std::string>> base_inputs{
      {"k", str(k)}, {"n", str(n)}, {"order", str(order)}};
  std::vector<BoundReport> out;
  auto push = [&](BoundReport r) {
    r.inputs.insert(r.inputs.begin(), base_inputs.begin(), base_inputs.end());
    out.push_back(std::move(r));
  };
  const bool trivial = h.is_trivial();
  bool transitive = false;
  try {
    transitive = is_transitive(h);
  } catch (const BudgetExceeded&) {
  }

  push(guarded(make("degree-times-base", ">="), [&](BoundReport& r) {
    if (trivial || !transitive) {
      r.note = "needs a nontrivial transitive group";
      return;
    }
    const auto mu = minimal_degree(h);
    const auto b = minimal_base_size(h);
    r.inputs = {{"mu", str(mu)}, {"b", str(b)}};
    r.lhs = q(static_cast<unsigned long>(mu * b));
    r.rhs = q(static_cast<unsigned long>(n));
    judge(r);
  }));

  push(guarded(make("cycles-vs-fixed-points", "<="), [&](BoundReport& r) {
    long best = 0;
    for (const auto& x : h.elements())
      best = std::max(best, 2 * static_cast<long>(x.sigma()) - static_cast<long>(x.fixed_points()));
    r.note = "lhs is the max of 2 sigma(h) - |fix(h)|";
    r.lhs = q(static_cast<unsigned long>(best));
    r.rhs = q(static_cast<unsigned long>(n));
    judge(r);
  }));

  push(guarded(make("fixed-point-ratio", "<="), [&](BoundReport& r) {
    if (trivial || !transitive) {
      r.note = "needs a nontrivial transitive group";
      return;
    }
    // fpr(h) <= 1 - 1/log2|H| for all h != 1  <=>  2^n <= |H|^mu
    const auto mu = minimal_degree(h);
    mpz_class rhs;
    mpz_pow_ui(rhs.get_mpz_t(), order.get_mpz_t(), mu);
    r.inputs = {{"mu", str(mu)}};
    r.note = "2^n against |H|^mu";
    r.lhs = q(pow_ui(2, n));
    r.rhs = q(rhs);
    judge(r);
  }));

  std::size_t ms = 0;
  if (!trivial) {
    try {
      ms = max_nonidentity_sigma(h);
    } catch (const BudgetExceeded&) {
    }
  }

  push(guarded(make("small-cycle-condition", ">="), [&](BoundReport& r) {
    if (trivial) {
      r.note = "needs a nontrivial group";
      return;
    }
    ms = max_nonidentity_sigma(h);
    r.inputs = {{"max_sigma", str(ms)}};
    r.note = "k^(n - max_sigma) against 2kn|H|^2";
    r.lhs = q(pow_ui(k, n - ms));
    r.rhs = q(mpz_class(2 * mpz_class(static_cast<unsigned long>(k)) * static_cast<unsigned long>(n) *
                        order * order));
    judge(r);
  }));

  push(guarded(make("no-transposition", "="), [&](BoundReport& r) {
    r.note = "lhs is 1 when H contains a transposition";
    r.lhs = q(static_cast<unsigned long>(contains_transposition(h) ? 1 : 0));
    r.rhs = q(0ul);
    judge(r);
  }));

  push(guarded(make("small-order-condition", "<="), [&](BoundReport& r) {
    // |H| <= 2^(sqrt(n)/4)  <=>  |H|^4 <= 2^sqrt(n)
    mpz_class lhs;
    mpz_pow_ui(lhs.get_mpz_t(), order.get_mpz_t(), 4);
    const auto s0 = static_cast<std::uint64_t>(mpz_class(sqrt(mpz_class(static_cast<unsigned long>(n)))).get_ui());
    r.lhs = q(lhs);
    if (s0 * s0 == n) {
      r.rhs = q(pow_ui(2, s0));
      judge(r);
      return;
    }
    r.rhs = Quantity::approx_log2(std::sqrt(static_cast<double>(n)));
    if (lhs <= pow_ui(2, s0)) {
      r.holds = Verdict::holds;
      r.note = "decided exactly against 2^floor(sqrt n)";
    } else if (lhs > pow_ui(2, s0 + 1)) {
      r.holds = Verdict::fails;
      r.note = "decided exactly against 2^ceil(sqrt n)";
    } else {
      judge(r);
      return;
    }
    r.mode = "exact";
  }));

  std::optional<mpz_class> kg;
  std::string kg_note;
  try {
    kg = auto_count(h, k).value;
  } catch (const Error& e) {
    kg_note = e.what();
  }

  push(guarded(make("near-regular-count", "<"), [&](BoundReport& r) {
    r.note = "observation; implied by small-cycle-condition or small-order-condition";
    r.rhs = q(mpq_class(pow_ui(k, n) * (k * n + 1), order * static_cast<unsigned long>(k * n)));
    if (!kg) {
      r.note = kg_note;
      return;
    }
    r.lhs = q(*kg);
    judge(r);
  }));

  push(guarded(make("orbit-lower-bound", ">="), [&](BoundReport& r) {
    r.rhs = q(mpq_class(pow_ui(k, n), order));
    if (!kg) {
      r.note = kg_note;
      return;
    }
    r.lhs = q(*kg);
    judge(r);
  }));

  // Non-regular orbit statistics and the class-sum identity.
  std::optional<OrbitStats> stats;
  std::string stats_note;
  if (!trivial) {
    try {
      stats = nonregular_orbit_stats(h, k);
    } catch (const BudgetExceeded& e) {
      stats_note = std::string("over budget: ") + e.what();
    } catch (const Error& e) {
      stats_note = e.what();
    }
  } else {
    stats_note = "needs a nontrivial group";
  }
  auto with_stats = [&](BoundReport r, auto&& fill) {
    if (!stats) {
      r.note = stats_note;
      if (!stats_note.empty() && stats_note.rfind("over budget", 0) != 0 && !trivial)
        r.holds = Verdict::fails;
      return r;
    }
    fill(r);
    judge(r);
    return r;
  };
  push(with_stats(make("nonregular-orbits", "<"), [&](BoundReport& r) {
    r.lhs = q(stats->nonregular_orbits);
    r.rhs = q(mpz_class(2 * pow_ui(k, stats->max_sigma)));
  }));
  push(with_stats(make("nonregular-colorings", "<="), [&](BoundReport& r) {
    r.lhs = q(stats->delta_size);
    r.rhs = q(mpz_class((order - 1) * pow_ui(k, stats->max_sigma)));
  }));
  push(with_stats(make("class-sum-identity", "="), [&](BoundReport& r) {
    r.note = "k(G) against (k^n - |Delta|)/|H| + sum of k(I) over non-regular orbits";
    const mpz_class regular = (pow_ui(k, n) - stats->delta_size) / order;
    r.rhs = q(mpz_class(regular + stats->nonregular_class_sum));
    if (kg) r.lhs = q(*kg);
  }));
  return out;
}

BoundReport subset_orbit_bound(std::size_t m, std::size_t ell, std::uint32_t k) {
  if (ell < 1 || 2 * ell >= m) throw InvalidArgument("needs 1 <= l < m/2");
  if (k < 1) throw InvalidArgument("k must be >= 1");
  auto r = make("subset-orbit-bound", "<");
  r.asymptotic = true;
  const double c = binomial(m, ell).get_d();
  const double lk = std::log2(static_cast<double>(k));
  const double a = 7.0 / 8.0 * c * lk;
  const double b = -0.58 * log2_of(factorial(m)) + c * lk;
  r.rhs = Quantity::approx_log2(1.0 + std::max(a, b));
  r.inputs = {{"m", str(m)}, {"l", str(ell)}, {"k", str(k)}, {"n", binomial(m, ell).get_str()}};
  return guarded(std::move(r), [&](BoundReport& rep) {
    rep.lhs = q(burnside_orbit_count(subsets_group(m, ell), k));
    judge(rep);
  });
}

BoundReport product_class_bound(std::size_t m, std::size_t ell, std::size_t t, std::uint32_t k) {
  if (ell < 1 || ell >= m || t < 1) throw InvalidArgument("needs 1 <= l < m and t >= 1");
  if (k < 1) throw InvalidArgument("k must be >= 1");
  auto r = make("product-class-bound", "<");
  r.asymptotic = true;
  mpz_class n;
  mpz_pow_ui(n.get_mpz_t(), binomial(m, ell).get_mpz_t(), t);
  r.inputs = {{"m", str(m)}, {"l", str(ell)}, {"t", str(t)}, {"k", str(k)}, {"n", str(n)}};
  return guarded(std::move(r), [&](BoundReport& rep) {
    mpz_class orbits_one = burnside_orbit_count(subsets_group(m, ell), k);
    mpz_class orbits_t;
    mpz_pow_ui(orbits_t.get_mpz_t(), orbits_one.get_mpz_t(), t);
    rep.inputs.emplace_back("orbit_term", str(orbits_t));
    Quantity power;
    const mpz_class two_n = 2 * n;
    if (mpz_divisible_ui_p(two_n.get_mpz_t(), 3) && n <= 3'000'000) {
      power = q(pow_ui(k, mpz_class(two_n / 3).get_ui()));
    } else {
      power = Quantity::approx_log2(two_n.get_d() / 3.0 * std::log2(static_cast<double>(k)));
    }
    rep.rhs = q(pow_ui(5, m * t)) * (q(mpz_class(pow_ui(2, t) * orbits_t)) + power);
    const auto h = family("product:" + std::to_string(m) + "," + std::to_string(ell) + "," +
                          std::to_string(t));
    rep.lhs = q(auto_count(h, k).value);
    judge(rep);
  });
}

BoundReport coordinatewise_orbit_check(std::size_t m, std::size_t ell, std::size_t t, std::uint32_t k) {
  if (ell < 1 || ell >= m || t < 1) throw InvalidArgument("needs 1 <= l < m and t >= 1");
  auto r = make("coordinatewise-orbit-power", "=");
  r.inputs = {{"m", str(m)}, {"l", str(ell)}, {"t", str(t)}, {"k", str(k)}};
  r.note = "(S_m)^t on t disjoint copies of the l-subsets";
  return guarded(std::move(r), [&](BoundReport& rep) {
    const auto sym = family("symmetric:" + std::to_string(m));
    const SubsetIndexer idx(m, ell);
    const std::size_t c = idx.size();
    // coordinate i moves only the i-th copy, points i*c .. i*c+c-1
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < t; ++i) {
      for (const auto& g : sym.generators()) {
        const auto lifted = idx.lift(g);
        std::vector<Point> img(t * c);
        std::iota(img.begin(), img.end(), Point{0});
        for (std::size_t j = 0; j < c; ++j) img[i * c + j] = static_cast<Point>(i * c + lifted(static_cast<Point>(j)));
        gens.emplace_back(std::move(img));
      }
    }
    const PermGroup copies(std::move(gens));
    rep.lhs = q(burnside_orbit_count(copies, k));
    mpz_class rhs;
    mpz_pow_ui(rhs.get_mpz_t(), burnside_orbit_count(subsets_group(m, ell), k).get_mpz_t(), t);
    rep.rhs = q(rhs);
    judge(rep);

    // Same group in the product action on Omega^t, for comparison only.
    try {
      std::vector<Permutation> pgens;
      const std::vector<Permutation> ids(t, Permutation::identity(m));
      for (std::size_t i = 0; i < t; ++i) {
        for (const auto& g : sym.generators()) {
          auto coords = ids;
          coords[i] = g;
          pgens.push_back(product_action_build(coords, Permutation::identity(t), m, ell));
        }
      }
      rep.inputs.emplace_back("product_set_orbits", str(burnside_orbit_count(PermGroup(std::move(pgens)), k)));
    } catch (const BudgetExceeded&) {
    }
  });
}

BoundReport subset_cycle_bound(std::size_t m, std::size_t ell) {
  if (ell < 1 || ell >= m) throw InvalidArgument("needs 1 <= l < m");
  auto r = make("subset-cycles-vs-fixed", "<=");
  r.inputs = {{"m", str(m)}, {"l", str(ell)}};
  r.note = "lhs is the max over S_m of 2 sigma'(pi) - |fix(pi)|";
  return guarded(std::move(r), [&](BoundReport& rep) {
    const SubsetIndexer idx(m, ell);
    long best = 0;
    for_each_partition(m, [&](const Partition& lambda) {
      const auto lift = idx.lift(permutation_of_type(lambda));
      best = std::max(best, 2 * static_cast<long>(lift.sigma()) - static_cast<long>(lift.fixed_points()));
    });
    rep.lhs = q(static_cast<unsigned long>(best));
    rep.rhs = q(binomial(m, ell));
    judge(rep);
  });
}

std::optional<LargeBaseParams> large_base_match(const PermGroup& h) {
  const auto& fam = h.family();
  if (!fam) return std::nullopt;
  LargeBaseParams p{};
  if (fam->name == "subsets" || fam->name == "subsets-alt") {
    p = {fam->params[0], fam->params[1], 1};
  } else if (fam->name == "product") {
    p = {fam->params[0], fam->params[1], fam->params[2]};
  } else {
    return std::nullopt;
  }
  if (p.m < 5 || p.ell < 1 || 2 * p.ell >= p.m || p.t < 1) return std::nullopt;
  return p;
}

SemiprimitiveReport semiprimitive_report(const PermGroup& h, std::uint32_t k) {
  if (k < 1) throw InvalidArgument("k must be >= 1");
  if (!is_transitive(h)) throw InvalidArgument("needs a transitive group");
  auto bd = block_decomposition(h);
  if (!bd) throw InvalidArgument("group is primitive; no block decomposition");
  if (!structure_classify(h).semiprimitive)
    throw NotSemiprimitive("group has a normal subgroup that is neither transitive nor semiregular");

  const auto& elems = h.elements();
  const std::uint64_t n = h.degree();
  const std::uint64_t r = bd->r;
  const std::uint64_t q_size = n / r;
  SemiprimitiveReport rep;
  rep.r = r;
  rep.degree = n;
  rep.blocks = bd->blocks;
  rep.order = static_cast<unsigned long>(elems.size());
  rep.kernel_order = static_cast<unsigned long>(bd->kernel_indices.size());
  rep.quotient_order = static_cast<unsigned long>(bd->quotient.size());
  rep.kernel_semiregular = is_semiregular(h, bd->kernel_indices);
  const std::vector<std::pair<std::string, std::string>> inputs{
      {"k", str(k)}, {"n", str(n)}, {"r", str(r)}, {"order", str(rep.order)},
      {"kernel_order", str(rep.kernel_order)}, {"quotient_order", str(rep.quotient_order)}};
  auto push = [&](BoundReport b) {
    b.inputs.insert(b.inputs.begin(), inputs.begin(), inputs.end());
    rep.reports.push_back(std::move(b));
  };

  std::vector<bool> in_kernel(elems.size(), false);
  for (auto i : bd->kernel_indices) in_kernel[i] = true;
  const auto id = h.identity_index();

  {
    auto b = make("kernel-semiregular", "=");
    unsigned long with_fixed = 0;
    for (auto i : bd->kernel_indices)
      if (i != id && elems[i].fixed_points() > 0) ++with_fixed;
    b.note = "lhs counts nonidentity kernel elements with a fixed point";
    b.lhs = q(with_fixed);
    b.rhs = q(0ul);
    judge(b);
    push(std::move(b));
  }

  mpq_class worst_ratio = 0, top_ratio = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto on_blocks = bd->block_action[i].sigma();
    worst_ratio = std::max(worst_ratio, mpq_class(static_cast<unsigned long>(elems[i].sigma()),
                                                  static_cast<unsigned long>(on_blocks)));
    if (!in_kernel[i])
      top_ratio = std::max(top_ratio, mpq_class(static_cast<unsigned long>(on_blocks), static_cast<unsigned long>(r)));
  }
  {
    auto b = make("block-cycle-bound", "<=");
    b.note = "lhs is the max of sigma(h) / sigma(h on blocks)";
    b.lhs = q(worst_ratio);
    b.rhs = q(mpz_class(static_cast<unsigned long>(q_size)));
    judge(b);
    push(std::move(b));
  }
  {
    auto b = make("cycle-ratio-bound", "<=");
    const auto ms = max_nonidentity_sigma(h);
    b.lhs = q(mpq_class(static_cast<unsigned long>(ms), static_cast<unsigned long>(n)));
    b.rhs = q(std::max(mpq_class(1, 2), top_ratio));
    judge(b);
    push(std::move(b));
  }

  // Orbit-count chain.
  const mpz_class kn = pow_ui(k, n);
  const Quantity k_half = pow_half(k, n);
  const mpz_class order = rep.order;
  mpz_class outside = 0;  // sum over nonidentity quotient elements of k^(sigma * n/r)
  for (const auto& x : bd->quotient.elements())
    if (!x.is_identity()) outside += pow_ui(k, x.sigma() * q_size);
  mpz_class kernel_sum = 0;  // sum over nonidentity kernel elements of k^sigma
  for (auto i : bd->kernel_indices)
    if (i != id) kernel_sum += pow_ui(k, elems[i].sigma());

  const Quantity orbits = q(burnside_orbit_count(h, k));
  const Quantity split = (q(mpz_class(rep.kernel_order * outside + kn)) +
                          q(mpz_class(rep.kernel_order - 1)) * k_half) *
                         q(mpq_class(1, order));
  const Quantity quotient_orbits = q(orbit_count_big(bd->quotient, pow_ui(k, q_size)));
  const Quantity chain = quotient_orbits + q(mpq_class(kn, order)) +
                         q(mpq_class(static_cast<unsigned long>(n), order)) * k_half;
  {
    auto b = make("orbit-split", "<=");
    b.note = "orbit count against the kernel/coset split of the Burnside sum";
    b.lhs = orbits;
    b.rhs = split;
    judge(b);
    push(std::move(b));
  }
  {
    auto b = make("orbit-chain-step", "<");
    b.lhs = split;
    b.rhs = chain;
    judge(b);
    push(std::move(b));
  }
  {
    auto b = make("orbit-chain", "<");
    b.note = "orbit count against quotient orbits on k^(n/r) colors + k^n/|H| + n k^(n/2)/|H|";
    b.lhs = orbits;
    b.rhs = chain;
    judge(b);
    push(std::move(b));
  }
  {
    auto b = make("kernel-term", "<");
    b.note = "sum over nonidentity kernel elements of k^sigma against (n/r) k^(n/2)";
    b.lhs = q(kernel_sum);
    b.rhs = q(static_cast<unsigned long>(q_size)) * k_half;
    judge(b);
    push(std::move(b));
  }

  // Inertia groups from one orbit census.
  auto meeting = make("inertia-meeting-kernel", "<=");
  meeting.note = "orbits whose stabilizer meets the kernel nontrivially";
  auto ek = make("inertia-classes-vs-order", "<=");
  ek.note = "observation: e_K against (5/8)|H|, expected only for nonabelian H";
  ek.asymptotic = true;
  try {
    auto census = orbit_census(h, k);
    kernels::omp::fill_class_counts(h, census.stabilizers);
    mpz_class meet = 0, e_k = 0;
    for (const auto& s : census.stabilizers) {
      const bool hits = std::any_of(s.members.begin(), s.members.end(),
                                    [&](std::uint32_t i) { return i != id && in_kernel[i]; });
      if (hits)
        meet += static_cast<unsigned long>(s.orbits);
      else
        e_k = std::max(e_k, s.class_count);
    }
    rep.e_kernel = e_k;
    meeting.lhs = q(meet);
    meeting.rhs = q(kernel_sum);
    judge(meeting);
    ek.lhs = q(e_k);
    ek.rhs = q(mpq_class(5 * order, 8));
    if (is_abelian(h))
      ek.note = "not evaluated: H is abelian";
    else
      judge(ek);
  } catch (const BudgetExceeded& e) {
    meeting.note = ek.note = std::string("over budget: ") + e.what();
  }
  push(std::move(meeting));
  push(std::move(ek));
  return rep;
}

std::vector<ScanRow> counterexample_scan(std::size_t m_first, std::size_t m_last, const Budget& budget) {
  if (m_first < 1 || m_last < m_first) throw InvalidArgument("needs 1 <= m_first <= m_last");
  std::vector<ScanRow> rows;
  constexpr std::uint32_t k = 2;
  for (std::size_t m = m_first; m <= m_last; ++m) {
    const auto h = family("wreath-cyclic:" + std::to_string(m), budget);
    const std::size_t n = 2 * m;
    std::optional<mpz_class> value;
    try {
      value = clifford_count(h, k).value;
    } catch (const BudgetExceeded&) {
    }
    auto row = [&](const std::string& check, Quantity bound, const std::string& rel) {
      ScanRow r;
      r.param = "m=" + std::to_string(m) + ":" + check;
      r.k = k;
      r.n = n;
      r.order = h.order();
      r.value = value;
      r.bound = bound;
      if (value) {
        BoundReport b;
        b.relation = rel;
        b.lhs = q(*value);
        b.rhs = bound;
        judge(b);
        r.holds = b.holds;
        r.mode = b.mode;
      }
      rows.push_back(std::move(r));
    };
    row("orbit-lower", q(orbit_lower_bound(h, k)), ">=");
    row("five-pow-over-m", q(mpq_class(pow_ui(5, m), static_cast<unsigned long>(m))), ">=");
    row("exceeds-k-pow-n", q(pow_ui(k, n)), ">");
  }
  return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "param,k,n,order,value,bound,holds,mode\n";
  for (const auto& r : rows) {
    os << r.param << ',' << r.k << ',' << r.n << ',' << r.order.get_str() << ','
       << (r.value ? r.value->get_str() : "skipped") << ',' << r.bound.to_string() << ','
       << to_string(r.holds) << ',' << r.mode << '\n';
  }
  return os.str();
}

FixProbe fixed_subset_probe(std::size_t m_last) {
  if (m_last < 3) throw InvalidArgument("probe needs m_last >= 3");
  FixProbe probe;
  for (std::size_t m = 3; m <= m_last; ++m) {
    FixProbeRow row;
    row.m = m;
    for (std::size_t ell = 1; 2 * ell < m; ++ell) {
      const mpz_class limit = 3 * binomial(m, ell);
      for_each_partition(m, [&](const Partition& lambda) {
        if (4 * lambda.length() > 3 * m) return;
        ++row.checked;
        if (4 * fix_subsets_formula(cycle_type_of(lambda), ell) >= limit) ++row.counterexamples;
      });
    }
    probe.rows.push_back(row);
  }
  probe.clean_from = m_last + 1;
  for (auto it = probe.rows.rbegin(); it != probe.rows.rend() && it->counterexamples == 0; ++it)
    probe.clean_from = it->m;
  return probe;
}

}  // namespace wreath
