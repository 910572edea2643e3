// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Expected values come from test-side oracles (tests/support) or
// are independently derived small goldens.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "wreath/actions.hpp"
#include "wreath/bounds.hpp"
#include "wreath/classcount.hpp"
#include "wreath/combinatorics.hpp"
#include "wreath/kernels.hpp"
#include "wreath/report_json.hpp"
#include "wreath/structure.hpp"

using namespace wreath;
using Clock = std::chrono::steady_clock;

namespace {

struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> failures;  // first few only

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (++failed <= 8) failures.push_back(what);
  }
  bool ok() const { return failed == 0; }
};

std::string str(const mpz_class& z) { return z.get_str(); }

mpq_class ratio(const mpz_class& a, const mpz_class& b) {
  mpq_class q(a, b);
  q.canonicalize();
  return q;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Groups of the triangulation matrix.
const std::vector<std::pair<std::string, std::string>> kMatrix{
    {"C2", "cyclic:2"},           {"C3", "cyclic:3"},     {"C4", "cyclic:4"},
    {"C2xC2", "gens:4,(1 2)(3 4),(1 3)(2 4)"},           {"S3", "symmetric:3"},
    {"D4", "dihedral:4"},         {"C2wrC2", "wreath-cyclic:2"}, {"C5", "cyclic:5"}};

// Orbits of a group on {0,1}^n (n <= 32) by a generator-graph walk.
// Colorings are bitmasks with point j at bit j; images use per-byte tables.
std::uint64_t binary_orbits(const std::vector<oracle::Perm>& gens) {
  const std::size_t n = gens.front().size();
  const std::size_t bytes = (n + 7) / 8;
  std::vector<std::vector<std::array<std::uint32_t, 256>>> tables;
  for (const auto& g : gens) {
    std::vector<std::array<std::uint32_t, 256>> t(bytes);
    for (std::size_t b = 0; b < bytes; ++b)
      for (std::uint32_t v = 0; v < 256; ++v) {
        std::uint32_t img = 0;
        for (std::size_t bit = 0; bit < 8; ++bit) {
          const std::size_t j = 8 * b + bit;
          if (j < n && ((v >> bit) & 1U)) img |= std::uint32_t{1} << g[j];
        }
        t[b][v] = img;
      }
    tables.push_back(std::move(t));
  }
  const std::uint64_t space = std::uint64_t{1} << n;
  std::vector<std::uint64_t> seen((space + 63) / 64);
  auto test_and_set = [&](std::uint64_t c) {
    auto& w = seen[c >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    if (w & bit) return false;
    w |= bit;
    return true;
  };
  std::vector<std::uint32_t> stack;
  std::uint64_t orbits = 0;
  for (std::uint64_t s = 0; s < space; ++s) {
    if (!test_and_set(s)) continue;
    ++orbits;
    stack.push_back(static_cast<std::uint32_t>(s));
    while (!stack.empty()) {
      const std::uint32_t c = stack.back();
      stack.pop_back();
      for (const auto& t : tables) {
        std::uint32_t img = 0;
        for (std::size_t b = 0; b < bytes; ++b) img |= t[b][(c >> (8 * b)) & 0xFF];
        if (test_and_set(img)) stack.push_back(img);
      }
    }
  }
  return orbits;
}

bool report(int id, const std::string& title, const Tally& t, const std::string& extra = {}) {
  std::cout << "criterion " << id << " " << (t.ok() ? "PASS" : "FAIL") << "  " << title << " (" << t.checks
            << " checks" << (extra.empty() ? "" : ", " + extra) << ")\n";
  for (const auto& f : t.failures) std::cout << "    failed: " << f << "\n";
  if (t.failed > t.failures.size()) std::cout << "    ... " << t.failed - t.failures.size() << " more\n";
  std::cout.flush();
  return t.ok();
}

double c1_seconds = 0, c4_seconds = 0;

bool criterion1() {
  const auto t0 = Clock::now();
  Tally t;
  for (std::uint32_t k : {2U, 3U})
    for (const auto& [name, spec] : kMatrix) {
      const auto h = family(spec);
      if (pow_ui(k, h.degree()) * h.size() > 1'000'000) continue;
      const auto c = clifford_count(h, k, Exec::serial).value;
      const auto b = brute_force_count(k, h).value;
      t.expect(c == b, "k=" + std::to_string(k) + " " + name + ": clifford " + str(c) + " brute " + str(b));
    }
  // Goldens: C2 wr C2 -> 5, C2 wr C3 -> 8, C3 wr C2 -> 9, each also by the prime-degree cyclic formula.
  const std::array<std::tuple<std::uint32_t, std::uint64_t, int>, 3> goldens{{{2, 2, 5}, {2, 3, 8}, {3, 2, 9}}};
  for (auto [k, p, want] : goldens) {
    const auto h = family("cyclic:" + std::to_string(p));
    const auto formula = cyclic_formula(k, p).exact;
    t.expect(clifford_count(h, k).value == want, "golden k=" + std::to_string(k) + " C" + std::to_string(p));
    t.expect(brute_force_count(k, h).value == want, "golden brute k=" + std::to_string(k));
    t.expect(formula && *formula == want, "golden formula k=" + std::to_string(k));
  }
  c1_seconds = seconds_since(t0);
  return report(1, "clifford = brute force on the triangulation matrix", t,
                std::to_string(c1_seconds).substr(0, 5) + " s");
}

bool criterion2() {
  Tally t;
  for (std::uint64_t n = 1; n <= 7; ++n)
    for (std::uint32_t k = 1; k <= 3; ++k) {
      const auto h = family("symmetric:" + std::to_string(n));
      t.expect(clifford_count(h, k).value == tuples_of_partitions_count(k, n),
               "S" + std::to_string(n) + " k=" + std::to_string(k));
    }
  for (std::uint64_t p : {2, 3, 5})
    for (std::uint32_t k = 1; k <= 4; ++k) {
      const auto exact = cyclic_formula(k, p).exact;
      t.expect(exact && clifford_count(family("cyclic:" + std::to_string(p)), k).value == *exact,
               "C" + std::to_string(p) + " k=" + std::to_string(k));
    }
  for (std::uint64_t n = 2; n <= 8; ++n)
    for (std::uint32_t k = 1; k <= 4; ++k)
      t.expect(clifford_count(family("cyclic:" + std::to_string(n)), k).value <= cyclic_formula(k, n).upper,
               "cyclic upper n=" + std::to_string(n) + " k=" + std::to_string(k));
  return report(2, "closed forms agree with the census", t);
}

bool criterion3() {
  const auto t0 = Clock::now();
  Tally t;
  for (std::uint32_t k : {2U, 3U})
    for (const auto& [name, spec] : kMatrix) {
      const auto h = family(spec);
      t.expect(burnside_orbit_count(h, k) == oracle::orbit_count(testing_support::raw_gens(h), k),
               name + " k=" + std::to_string(k));
    }
  std::size_t subset_actions = 0;
  for (std::size_t m = 2; m <= 30; ++m)
    for (std::size_t ell = 1; ell < m; ++ell) {
      if (binomial(m, ell) > 30) continue;
      ++subset_actions;
      const auto h = family("subsets:" + std::to_string(m) + "," + std::to_string(ell));
      const auto direct = binary_orbits(testing_support::raw_gens(h));
      t.expect(burnside_orbit_count(h, 2) == direct,
               "S" + std::to_string(m) + " on " + std::to_string(ell) + "-subsets");
    }
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::uint32_t k = 1; k <= 4; ++k) {
      const auto h = family("symmetric:" + std::to_string(n));
      const auto want = binomial(n + k - 1, k - 1);
      t.expect(burnside_orbit_count(h, k) == want, "S" + std::to_string(n) + " k=" + std::to_string(k));
      if (pow_ui(k, n) <= 300000)
        t.expect(oracle::orbit_count(testing_support::raw_gens(h), k) == want,
                 "direct S" + std::to_string(n) + " k=" + std::to_string(k));
    }
  return report(3, "orbit counts match direct enumeration", t,
                std::to_string(subset_actions) + " subset actions, " +
                    std::to_string(seconds_since(t0)).substr(0, 5) + " s");
}

bool criterion4() {
  const auto t0 = Clock::now();
  Tally t;
  std::uint64_t checks = 0;
  for (std::size_t m = 1; m <= 10; ++m) {
    const auto tally = kernels::omp::fix_subset_exhaustive(m);
    checks += tally.checks;
    t.expect(tally.permutations == factorial(m), "m=" + std::to_string(m) + " coverage");
    t.expect(tally.mismatches == 0, "m=" + std::to_string(m) + ": " + std::to_string(tally.mismatches) + " mismatches");
  }
  std::mt19937_64 rng(14);
  for (int i = 0; i < 1000; ++i) {
    const auto p = testing_support::random_permutation(14, rng);
    const auto ct = p.cycle_type();
    for (std::size_t ell = 1; ell <= 14; ++ell) {
      ++checks;
      const auto direct = fix_subsets_direct(p, ell);
      t.expect(fix_subsets_formula(ct, ell) == direct, to_cycle_string(p) + " l=" + std::to_string(ell));
      t.expect(oracle::fixed_subsets_by_listing(testing_support::raw(p), ell) == direct, "listing " + to_cycle_string(p));
    }
  }
  c4_seconds = seconds_since(t0);
  return report(4, "fixed-subset formula against enumeration", t,
                std::to_string(checks) + " subset counts, " + std::to_string(c4_seconds).substr(0, 5) + " s");
}

bool criterion5() {
  Tally t;
  std::vector<std::string> specs;
  for (const auto& [name, spec] : kMatrix) specs.push_back(spec);
  for (const auto& spec : testing_support::small_groups()) specs.push_back(spec);
  for (const auto& spec : specs) {
    const auto h = family(spec);
    const std::size_t n = h.degree();
    const bool transitive = is_transitive(h);
    for (const auto& x : h.elements())
      t.expect(2 * x.sigma() <= n + x.fixed_points(), spec + " sigma " + to_cycle_string(x));
    if (transitive) {
      const auto inv = numeric_invariants(h, false);
      t.expect(inv.mu * inv.b >= n, spec + " mu*b");
      for (const auto& x : h.elements()) {
        if (x.is_identity()) continue;
        mpz_class lhs = pow_ui(2, n), rhs;
        mpz_pow_ui(rhs.get_mpz_t(), h.order().get_mpz_t(), n - x.fixed_points());
        t.expect(lhs <= rhs, spec + " fixed point ratio " + to_cycle_string(x));
      }
    }
    for (std::uint32_t k : {2U, 3U}) {
      if (pow_ui(k, n) > 200000) continue;
      const std::string tag = spec + " k=" + std::to_string(k);
      const auto s = nonregular_orbit_stats(h, k);
      const auto kg = clifford_count(h, k).value;
      t.expect(s.nonregular_orbits < 2 * pow_ui(k, s.max_sigma), tag + " t bound");
      t.expect(s.delta_size <= (h.order() - 1) * pow_ui(k, s.max_sigma), tag + " delta bound");
      const mpq_class identity = ratio(pow_ui(k, n) - s.delta_size, h.order()) + s.nonregular_class_sum;
      t.expect(mpq_class(kg) == identity, tag + " class sum identity");
      if (!h.is_trivial() && h.size() <= 2000) {
        const auto e = max_subgroup_class_count(h);
        const mpq_class bound = ratio(pow_ui(k, n), h.order()) + 2 * e * pow_ui(k, s.max_sigma);
        t.expect(mpq_class(kg) < bound, tag + " class count upper bound");
        const auto r = class_count_upper_bound(h, k, ESource::exact_lattice);
        t.expect(r.holds == Verdict::holds && r.rhs && r.rhs->is_exact() && r.rhs->exact() == bound,
                 tag + " class count upper bound report");
      }
    }
  }
  for (std::size_t m = 2; m <= 8; ++m) {
    const auto sm = family("symmetric:" + std::to_string(m));
    for (std::size_t ell = 1; ell < m; ++ell) {
      const auto total = binomial(m, ell);
      for (const auto& p : sm.elements()) {
        const auto fixed = fix_subsets_direct(p, ell);
        t.expect(2 * mpz_class(static_cast<unsigned long>(sigma_prime(p, ell))) <= total + fixed,
                 "subset cycles " + to_cycle_string(p) + " l=" + std::to_string(ell));
      }
    }
  }
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t tt = 1; tt <= 2; ++tt)
      for (std::uint32_t k = 1; k <= 2; ++k) {
        const auto r = coordinatewise_orbit_check(m, 1, tt, k);
        t.expect(r.holds == Verdict::holds, "coordinatewise orbit power m=" + std::to_string(m) + " t=" +
                                                std::to_string(tt) + " k=" + std::to_string(k));
        // n(S_m on m points, k colors)^t = C(m+k-1, k-1)^t.
        mpz_class want;
        mpz_pow_ui(want.get_mpz_t(), binomial(m + k - 1, k - 1).get_mpz_t(), tt);
        t.expect(r.rhs && r.rhs->is_exact() && r.rhs->exact() == want, "coordinatewise orbit power value m=" +
                                                                           std::to_string(m));
      }
  return report(5, "unconditional inequalities and identities", t);
}

bool criterion6() {
  Tally t;
  for (const auto* spec : {"cyclic:4", "cyclic:6", "cyclic:8", "quaternion"}) {
    const auto h = family(spec);
    const auto rep = semiprimitive_report(h, 2);
    t.expect(rep.kernel_semiregular, std::string(spec) + " kernel semiregular");
    t.expect(is_semiregular(h, block_decomposition(h)->kernel_indices), std::string(spec) + " kernel semiregular (direct)");
    bool chain = false, cycles = false;
    for (const auto& b : rep.reports) {
      if (b.name == "orbit-chain") chain = b.holds == Verdict::holds && b.mode == "exact";
      if (b.name == "block-cycle-bound") cycles = b.holds == Verdict::holds;
    }
    t.expect(chain, std::string(spec) + " orbit chain");
    t.expect(cycles, std::string(spec) + " block cycle report");
    // sigma on points <= (n/r) sigma on blocks, recomputed here.
    const auto& blocks = rep.blocks;
    std::vector<std::uint32_t> block_of(h.degree());
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (auto p : blocks[b]) block_of[p] = static_cast<std::uint32_t>(b);
    for (const auto& x : h.elements()) {
      std::vector<Point> img(blocks.size());
      for (std::size_t b = 0; b < blocks.size(); ++b) img[b] = block_of[x(blocks[b][0])];
      t.expect(x.sigma() * blocks.size() <= h.degree() * Permutation(img).sigma(),
               std::string(spec) + " " + to_cycle_string(x));
    }
  }
  const auto d = structure_classify(family("wreath-cyclic:2"));
  t.expect(d.transitive && !d.primitive && !d.semiprimitive, "C2 wr C2 classified not semiprimitive");
  bool rejected = false;
  try {
    semiprimitive_report(family("wreath-cyclic:2"), 2);
  } catch (const NotSemiprimitive&) {
    rejected = true;
  }
  t.expect(rejected, "C2 wr C2 report rejected");
  return report(6, "semiprimitive decomposition", t);
}

bool criterion7() {
  Tally t;
  const auto rows = counterexample_scan(2, 3);
  const std::array<int, 2> goldens{20, 55};
  std::string observed;
  for (std::size_t m = 2; m <= 3; ++m) {
    const auto h = family("wreath-cyclic:" + std::to_string(m));
    const auto kg = clifford_count(h, 2).value;
    t.expect(kg == goldens[m - 2], "m=" + std::to_string(m) + " value " + str(kg));
    t.expect(kg == brute_force_count(2, h).value, "m=" + std::to_string(m) + " brute");
    mpz_class lower;
    mpz_cdiv_q(lower.get_mpz_t(), pow_ui(2, 2 * m).get_mpz_t(), h.order().get_mpz_t());
    t.expect(kg >= lower, "m=" + std::to_string(m) + " orbit lower");
    t.expect(mpq_class(kg) >= ratio(pow_ui(5, m), m), "m=" + std::to_string(m) + " five-pow-over-m");
    for (const auto& row : rows) {
      if (!row.param.starts_with("m=" + std::to_string(m) + ":")) continue;
      t.expect(row.value && *row.value == kg, row.param + " value");
      if (row.param.ends_with("orbit-lower") || row.param.ends_with("five-pow-over-m"))
        t.expect(row.holds == Verdict::holds, row.param);
      if (row.param.ends_with("exceeds-k-pow-n"))
        observed += (observed.empty() ? "" : ", ") + row.param + "=" + to_string(row.holds);
    }
  }
  return report(7, "counterexample family at m = 2, 3", t, "observed " + observed);
}

bool criterion8() {
  Tally t;
  auto invoke = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return std::make_pair(code, out.str());
  };
  const std::vector<std::vector<std::string>> jobs{
      {"count", "--group", "dihedral:6", "--k", "3", "--output", "json"},
      {"count", "--group", "subsets:5,2", "--k", "2", "--method", "clifford", "--output", "json", "--jobs", "4"},
      {"bounds", "--group", "cyclic:6", "--k", "2", "--output", "json"},
      {"classify", "--group", "quaternion", "--output", "json"},
      {"scan", "--from", "2", "--to", "3", "--output", "csv"},
      {"scan", "--from", "2", "--to", "3", "--output", "json", "--jobs", "2"}};
  for (const auto& job : jobs) {
    const auto a = invoke(job), b = invoke(job), c = invoke(job);
    t.expect(a.first == 0 && a == b && b == c, "repeat " + job[0] + " " + job[2]);
  }
  const mpz_class two64 = pow_ui(2, 64);
  for (auto [k, n] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{{4, 40}, {16, 60}, {32, 64}}) {
    const auto value = symmetric_closed_form(k, n);
    const std::string tag = "k=" + std::to_string(k) + " n=" + std::to_string(n);
    if (k != 4) t.expect(value > two64, tag + " exceeds 2^64");
    const auto r = auto_count(family("symmetric:" + std::to_string(n)), k);
    const auto text = to_json(r).dump();
    const auto back = count_from_json(Json::parse(text)["value"]);
    t.expect(back == value, tag + " round trip");
    const auto cli_out = invoke({"count", "--group", "symmetric:" + std::to_string(n), "--k", std::to_string(k),
                                 "--output", "json"});
    t.expect(cli_out.first == 0 && count_from_json(Json::parse(cli_out.second)["value"]) == value, tag + " cli");
  }
  return report(8, "determinism and exact serialization", t);
}

bool criterion9() {
  Tally t;
  t.expect(c1_seconds < 60, "criterion 1 took " + std::to_string(c1_seconds) + " s");
  t.expect(c4_seconds < 120, "criterion 4 took " + std::to_string(c4_seconds) + " s");
  std::string timings;
  for (const auto* spec : {"subsets:6,3", "dihedral:20", "cyclic:20"}) {
    const auto h = family(spec);
    const auto t0 = Clock::now();
    const auto r = clifford_count(h, 2);
    const double s = seconds_since(t0);
    t.expect(h.degree() == 20 && h.size() <= 1000, std::string(spec) + " shape");
    t.expect(s < 30, std::string(spec) + " took " + std::to_string(s) + " s");
    t.expect(r.value >= burnside_orbit_count(h, 2), std::string(spec) + " sanity");
    timings += std::string(timings.empty() ? "" : ", ") + spec + " " + std::to_string(s).substr(0, 5) + " s";
  }
  return report(9, "performance envelope", t, timings);
}

}  // namespace

// With arguments, runs only the listed criteria (criterion 9 then uses
// whatever timings of 1 and 4 were taken).
int main(int argc, char** argv) {
  const std::vector<std::function<bool()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                    criterion6, criterion7, criterion8, criterion9};
  std::vector<bool> selected(criteria.size(), argc == 1);
  for (int i = 1; i < argc; ++i) {
    const int id = std::atoi(argv[i]);
    if (id < 1 || id > static_cast<int>(criteria.size())) {
      std::cerr << "unknown criterion " << argv[i] << "\n";
      return 2;
    }
    selected[id - 1] = true;
  }
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!selected[i]) continue;
    try {
      if (!criteria[i]()) ++failed;
    } catch (const std::exception& e) {
      std::cout << "criterion " << i + 1 << " FAIL  exception: " << e.what() << "\n";
      ++failed;
    }
  }
  std::cout << (failed == 0 ? "all criteria passed\n" : std::to_string(failed) + " criteria failed\n");
  return failed == 0 ? 0 : 1;
}
