#include "wreath/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "wreath/actions.hpp"
#include "wreath/bounds.hpp"
#include "wreath/classcount.hpp"
#include "wreath/combinatorics.hpp"
#include "wreath/structure.hpp"

namespace wreath {

namespace {

class Log {
public:
  Log(std::string suite, std::ostream& os) : os_(os) { result_.name = std::move(suite); }

  template <class A, class B>
  void equal(const std::string& what, const A& expected, const B& actual) {
    std::ostringstream e, a;
    e << expected;
    a << actual;
    check(what, e.str() == a.str(), "expected " + e.str() + ", got " + a.str());
  }

  void check(const std::string& what, bool ok, const std::string& diff = {}) {
    ++result_.cases;
    if (ok) {
      os_ << "  ok    " << what << '\n';
    } else {
      ++result_.failures;
      os_ << "  FAIL  " << what << (diff.empty() ? "" : ": " + diff) << '\n';
    }
  }

  void verdict(const BoundReport& r, const std::string& where) {
    check(r.name + " " + where, r.holds == Verdict::holds,
          (r.lhs ? r.lhs->to_string() : "-") + " " + r.relation + " " +
              (r.rhs ? r.rhs->to_string() : "-") + " is " + to_string(r.holds));
  }

  // Runs body; an exception is one failed case.
  void guard(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(what, false, std::string("threw: ") + e.what());
    }
  }

  SuiteResult finish() {
    os_ << result_.name << ": " << result_.cases - result_.failures << "/" << result_.cases
        << " passed\n";
    return result_;
  }

private:
  std::ostream& os_;
  SuiteResult result_;
};

const std::vector<std::string>& oracle_groups() {
  static const std::vector<std::string> specs{
      "cyclic:2",        "cyclic:3", "cyclic:4", "gens:4,(1 2)(3 4),(1 3)(2 4)",
      "symmetric:3",     "dihedral:4", "wreath-cyclic:2", "cyclic:5", "alternating:4"};
  return specs;
}

std::string label(const std::string& spec, std::uint32_t k) {
  return spec + " k=" + std::to_string(k);
}

SuiteResult oracles(std::ostream& os) {
  Log log("oracles", os);
  for (const auto& spec : oracle_groups()) {
    const auto h = family(spec);
    for (std::uint32_t k : {2u, 3u}) {
      if (pow_ui(k, h.degree()) * h.size() > 1'000'000) continue;
      log.guard(label(spec, k), [&] {
        const auto c = clifford_count(h, k, Exec::parallel);
        const auto s = clifford_count(h, k, Exec::serial);
        const auto b = brute_force_count(k, h);
        log.equal("clifford = brute " + label(spec, k), b.value, c.value);
        log.equal("clifford serial = parallel " + label(spec, k), s.value, c.value);
        if (auto cf = closed_form_count(h, k))
          log.equal("closed form = clifford " + label(spec, k), c.value, cf->value);
      });
    }
  }
  log.equal("k(C2 wr C2)", 5, clifford_count(family("cyclic:2"), 2).value);
  log.equal("k(C2 wr C3)", 8, clifford_count(family("cyclic:3"), 2).value);
  log.equal("k(C3 wr C2)", 9, clifford_count(family("cyclic:2"), 3).value);
  return log.finish();
}

SuiteResult burnside(std::ostream& os) {
  Log log("burnside", os);
  std::vector<std::string> specs = oracle_groups();
  for (std::size_t m = 3; m <= 7; ++m)
    for (std::size_t ell = 1; ell < m; ++ell)
      if (binomial(m, ell) <= 21) specs.push_back("subsets:" + std::to_string(m) + "," + std::to_string(ell));
  for (const auto& spec : specs) {
    const auto h = family(spec);
    for (std::uint32_t k : {2u, 3u}) {
      if (pow_ui(k, h.degree()) > (1u << 21)) continue;
      log.guard(label(spec, k), [&] {
        const auto census = orbit_census(h, k);
        log.equal("orbit count = census " + label(spec, k), census.total_orbits,
                  burnside_orbit_count(h, k));
      });
    }
  }
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::uint32_t k = 1; k <= 4; ++k)
      log.equal("S_" + std::to_string(n) + " orbits = C(n+k-1,k-1) k=" + std::to_string(k),
                weak_composition_count(n, k), burnside_orbit_count(family("symmetric:" + std::to_string(n)), k));
  return log.finish();
}

SuiteResult formulas(std::ostream& os, std::uint64_t seed) {
  Log log("formulas", os);
  for (std::size_t m = 1; m <= 8; ++m) {
    const auto t = kernels::omp::fix_subset_exhaustive(m);
    log.check("fixed subsets, all of S_" + std::to_string(m) + " (" + std::to_string(t.checks) + " checks)",
              t.mismatches == 0, std::to_string(t.mismatches) + " mismatches");
  }
  std::mt19937_64 rng(seed);
  std::size_t bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Point> img(14);
    std::iota(img.begin(), img.end(), Point{0});
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation p(img);
    for (std::size_t ell = 1; ell <= 14; ++ell)
      bad += fix_subsets_direct(p, ell) != fix_subsets_formula(p.cycle_type(), ell);
  }
  log.check("fixed subsets, 200 random permutations of 14 points", bad == 0, std::to_string(bad) + " mismatches");
  for (std::size_t m = 1; m <= 20; ++m) {
    mpz_class row = 0;
    bool recurrence = true;
    for (std::size_t j = 0; j <= m; ++j) {
      row += stirling_first(j, m);
      if (j >= 1 && stirling_first(j, m) != stirling_first(j - 1, m - 1) + (m - 1) * stirling_first(j, m - 1))
        recurrence = false;
    }
    log.check("Stirling recurrence m=" + std::to_string(m), recurrence);
    log.equal("Stirling row sum m=" + std::to_string(m), factorial(m), row);
  }
  for (std::size_t n = 1; n <= 7; ++n)
    for (std::uint32_t k = 1; k <= 3; ++k)
      log.equal("partition tuples = clifford S_" + std::to_string(n) + " k=" + std::to_string(k),
                tuples_of_partitions_count(k, n),
                clifford_count(family("symmetric:" + std::to_string(n)), k).value);
  for (std::uint64_t p : {2, 3, 5})
    for (std::uint32_t k = 1; k <= 4; ++k)
      log.equal("cyclic formula p=" + std::to_string(p) + " k=" + std::to_string(k),
                *cyclic_formula(k, p).exact, clifford_count(family("cyclic:" + std::to_string(p)), k).value);
  return log.finish();
}

SuiteResult bounds(std::ostream& os) {
  Log log("bounds", os);
  static const std::vector<std::string> unconditional{
      "degree-times-base",  "cycles-vs-fixed-points", "fixed-point-ratio", "orbit-lower-bound",
      "nonregular-orbits", "nonregular-colorings",   "class-sum-identity"};
  for (const auto& spec : oracle_groups()) {
    const auto h = family(spec);
    for (std::uint32_t k : {2u, 3u}) {
      log.guard(label(spec, k), [&] {
        for (const auto& r : predicates(h, k))
          if (std::find(unconditional.begin(), unconditional.end(), r.name) != unconditional.end())
            log.verdict(r, label(spec, k));
        log.verdict(class_count_upper_bound(h, k, ESource::exact_lattice), label(spec, k));
      });
    }
  }
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t t = 1; t <= 2; ++t)
      for (std::uint32_t k = 1; k <= 2; ++k)
        log.verdict(coordinatewise_orbit_check(m, 1, t, k), "m=" + std::to_string(m) + " t=" + std::to_string(t) + " k=" + std::to_string(k));
  for (std::size_t m = 3; m <= 8; ++m)
    for (std::size_t ell = 1; ell < m; ++ell)
      log.verdict(subset_cycle_bound(m, ell), "m=" + std::to_string(m) + " l=" + std::to_string(ell));
  return log.finish();
}

SuiteResult semiprimitive(std::ostream& os) {
  Log log("semiprimitive", os);
  for (const auto* spec : {"cyclic:4", "cyclic:6", "cyclic:8", "quaternion"}) {
    for (std::uint32_t k : {2u, 3u}) {
      log.guard(label(spec, k), [&] {
        const auto rep = semiprimitive_report(family(spec), k);
        log.check("kernel semiregular " + label(spec, k), rep.kernel_semiregular);
        for (const auto& r : rep.reports)
          if (!r.asymptotic && r.holds != Verdict::not_evaluated) log.verdict(r, label(spec, k));
      });
    }
  }
  bool rejected = false;
  try {
    semiprimitive_report(family("wreath-cyclic:2"), 2);
  } catch (const NotSemiprimitive&) {
    rejected = true;
  }
  log.check("wreath-cyclic:2 is not semiprimitive", rejected);
  return log.finish();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"oracles", "burnside", "formulas", "bounds", "semiprimitive"};
  return names;
}

SuiteResult run_suite(const std::string& name, std::ostream& log, std::uint64_t seed) {
  if (name == "oracles") return oracles(log);
  if (name == "burnside") return burnside(log);
  if (name == "formulas") return formulas(log, seed);
  if (name == "bounds") return bounds(log);
  if (name == "semiprimitive") return semiprimitive(log);
  throw InvalidArgument("unknown suite '" + name + "' (oracles, burnside, formulas, bounds, semiprimitive)");
}

}  // namespace wreath
