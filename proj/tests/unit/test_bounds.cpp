#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "wreath/actions.hpp"
#include "wreath/bounds.hpp"
#include "wreath/classcount.hpp"
#include "wreath/errors.hpp"
#include "wreath/structure.hpp"

using namespace wreath;

namespace {

const BoundReport& find(const std::vector<BoundReport>& reports, const std::string& name) {
  for (const auto& r : reports)
    if (r.name == name) return r;
  FAIL("missing report " << name);
  throw std::logic_error("unreachable");
}

mpq_class exact(const std::optional<Quantity>& q) {
  REQUIRE(q.has_value());
  REQUIRE(q->is_exact());
  return q->exact();
}

}  // namespace

TEST_CASE("class-count upper bound examples") {
  const auto c2 = class_count_upper_bound(family("cyclic:2"), 2);
  CHECK(exact(c2.rhs) == 10);
  CHECK(exact(c2.lhs) == 5);
  CHECK(c2.holds == Verdict::holds);
  CHECK(c2.e_source == "exact-lattice");
  CHECK(exact(class_count_upper_bound(family("cyclic:3"), 2).rhs) == mpq_class(44, 3));
  const auto s3 = class_count_upper_bound(family("symmetric:3"), 2);
  CHECK(exact(s3.rhs) == mpq_class(4, 3) + 24);
  CHECK(s3.holds == Verdict::holds);
  CHECK_THROWS_AS(class_count_upper_bound(family("trivial:2"), 2), InvalidArgument);
  const auto third = class_count_upper_bound(family("cyclic:3"), 2, ESource::power_third);
  CHECK(third.e_source == "bound-5^(n/3)");
  CHECK(parse_e_source("n-minus-1") == ESource::power_linear);
  CHECK_THROWS_AS(parse_e_source("nope"), InvalidArgument);
}

TEST_CASE("predicate examples") {
  const auto s3 = predicates(family("symmetric:3"), 2);
  const auto& mub = find(s3, "degree-times-base");
  CHECK(exact(mub.lhs) == 4);
  CHECK(exact(mub.rhs) == 3);
  CHECK(mub.holds == Verdict::holds);
  CHECK(find(s3, "no-transposition").holds == Verdict::fails);

  const auto c3 = predicates(family("cyclic:3"), 2);
  const auto& small_cycles = find(c3, "small-cycle-condition");
  CHECK(exact(small_cycles.lhs) == 4);
  CHECK(exact(small_cycles.rhs) == 108);
  CHECK(small_cycles.holds == Verdict::fails);
  CHECK(find(c3, "no-transposition").holds == Verdict::holds);
}

TEST_CASE("small-order condition is false for transitive groups up to degree 64") {
  for (const auto& spec : {"cyclic:4", "cyclic:16", "cyclic:64", "dihedral:12", "symmetric:5", "subsets:6,2", "product:3,1,2"}) {
    CAPTURE(spec);
    const auto r = find(predicates(family(spec), 2), "small-order-condition");
    CHECK(r.holds == Verdict::fails);
  }
}

TEST_CASE("subset orbit bound") {
  const auto r = subset_orbit_bound(5, 2, 2);
  CHECK(r.mode == "float");
  CHECK(r.asymptotic);
  CHECK(r.rhs->to_double() == doctest::Approx(861.1).epsilon(1e-3));
  CHECK(exact(subset_orbit_bound(5, 1, 2).lhs) == 6);
  CHECK(exact(subset_orbit_bound(6, 1, 2).lhs) == 7);
  CHECK_THROWS_AS(subset_orbit_bound(4, 2, 2), InvalidArgument);
}

TEST_CASE("product class bound") {
  const auto r = product_class_bound(6, 1, 1, 2);
  CHECK(exact(r.rhs) == 468750);
  CHECK(r.mode == "exact");
  const auto small = product_class_bound(3, 1, 2, 2);
  bool found = false;
  for (const auto& [key, value] : small.inputs)
    if (key == "orbit_term") {
      CHECK(value == "16");
      found = true;
    }
  CHECK(found);
}

TEST_CASE("coordinatewise orbit power") {
  const auto a = coordinatewise_orbit_check(3, 1, 2, 2);
  CHECK(exact(a.lhs) == 16);
  CHECK(exact(a.rhs) == 16);
  CHECK(a.holds == Verdict::holds);
  const auto b = coordinatewise_orbit_check(4, 1, 2, 2);
  CHECK(exact(b.lhs) == 25);
  CHECK(b.holds == Verdict::holds);
  for (std::size_t m = 2; m <= 5; ++m) CHECK(coordinatewise_orbit_check(m, 1, 1, 3).holds == Verdict::holds);
}

TEST_CASE("large base matching") {
  CHECK(large_base_match(family("subsets:5,2")) == LargeBaseParams{5, 2, 1});
  CHECK(large_base_match(family("product:5,1,2")) == LargeBaseParams{5, 1, 2});
  CHECK_FALSE(large_base_match(family("cyclic:6")).has_value());
  CHECK_FALSE(large_base_match(family("subsets:4,1")).has_value());
}

TEST_CASE("subset cycle bound") {
  for (std::size_t m = 2; m <= 8; ++m)
    for (std::size_t ell = 1; ell < m; ++ell) CHECK(subset_cycle_bound(m, ell).holds == Verdict::holds);
}

TEST_CASE("semiprimitive reports") {
  const auto c4 = semiprimitive_report(family("cyclic:4"), 2);
  CHECK(c4.r == 2);
  CHECK(c4.kernel_order == 2);
  CHECK(c4.kernel_semiregular);
  for (const auto& b : c4.reports)
    if (!b.asymptotic) CHECK_MESSAGE(b.holds != Verdict::fails, b.name);
  const auto c6 = semiprimitive_report(family("cyclic:6"), 2);
  CHECK((c6.r == 2 || c6.r == 3));
  CHECK(find(c6.reports, "orbit-chain").holds == Verdict::holds);
  CHECK_THROWS_AS(semiprimitive_report(family("wreath-cyclic:2"), 2), NotSemiprimitive);
  CHECK_THROWS_AS(semiprimitive_report(family("symmetric:4"), 2), InvalidArgument);
}

TEST_CASE("counterexample scan") {
  const auto rows = counterexample_scan(2, 3);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].param == "m=2:orbit-lower");
  CHECK(*rows[0].value == 20);
  CHECK(*rows[3].value == 55);
  for (const auto& r : rows)
    if (r.param.ends_with("orbit-lower")) CHECK(r.holds == Verdict::holds);
  const auto csv = scan_csv(rows);
  CHECK(csv.starts_with("param,k,n,order,value,bound,holds,mode\n"));
  CHECK(csv == scan_csv(counterexample_scan(2, 3)));
}

TEST_CASE("property: unconditional predicates hold on every test group") {
  for (const auto& spec : testing_support::small_groups()) {
    const auto h = family(spec);
    if (h.is_trivial()) continue;
    for (std::uint32_t k = 2; k <= 3; ++k) {
      CAPTURE(spec);
      CAPTURE(k);
      const auto reports = predicates(h, k);
      for (const auto* name : {"cycles-vs-fixed-points", "nonregular-orbits", "nonregular-colorings", "class-sum-identity",
                               "orbit-lower-bound"})
        CHECK_MESSAGE(find(reports, name).holds == Verdict::holds, name);
      if (is_transitive(h)) {
        CHECK(find(reports, "degree-times-base").holds == Verdict::holds);
        CHECK(find(reports, "fixed-point-ratio").holds == Verdict::holds);
      }
      if (h.size() <= 2000 && pow_ui(k, h.degree()) <= 200000) CHECK(class_count_upper_bound(h, k).holds == Verdict::holds);
    }
  }
}

TEST_CASE("property: evaluators are monotone in k and agree across exact and float modes") {
  for (std::size_t m = 5; m <= 7; ++m)
    for (std::size_t ell = 1; 2 * ell < m; ++ell) {
      double prev = 0;
      for (std::uint32_t k = 2; k <= 5; ++k) {
        const auto r = subset_orbit_bound(m, ell, k);
        CHECK(r.rhs->log2() > prev);
        prev = r.rhs->log2();
      }
    }
  for (std::uint32_t k = 2; k <= 4; ++k) {
    const auto a = product_class_bound(6, 1, 1, k);
    const auto b = product_class_bound(6, 1, 1, k + 1);
    CHECK(compare(*a.rhs, *b.rhs) == Relation::less);
    const auto approx = Quantity::approx_log2(a.rhs->log2());
    CHECK(compare(approx, *a.rhs) == Relation::indeterminate);
  }
}

TEST_CASE("fixed subset probe") {
  const auto probe = fixed_subset_probe(12);
  CHECK(probe.rows.size() >= 1);
  for (const auto& row : probe.rows) CHECK(row.checked > 0);
  CHECK(probe.clean_from <= 12);
}
