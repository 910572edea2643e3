#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "wreath/actions.hpp"
#include "wreath/combinatorics.hpp"
#include "wreath/errors.hpp"
#include "wreath/perm_group.hpp"

using namespace wreath;
using testing_support::small_groups;

TEST_CASE("closure orders") {
  CHECK(closure_elements({parse_cycles("(1 2)")}).size() == 2);
  CHECK(closure_elements({parse_cycles("(1 2 3)"), parse_cycles("(1 2)", 3)}).size() == 6);
  CHECK(closure_elements({parse_cycles("(1 2 3 4)"), parse_cycles("(1 3)", 4)}).size() == 8);
}

TEST_CASE("closure errors") {
  CHECK_THROWS_AS(closure_elements({parse_cycles("(1 2)"), parse_cycles("(1 2 3)")}), DegreeMismatch);
  Budget small;
  small.max_group_order = 100;
  CHECK_THROWS_AS(closure_elements(family("symmetric:5").generators(), small), BudgetExceeded);
}

TEST_CASE("class counts") {
  CHECK(class_count(family("trivial:3")) == 1);
  CHECK(class_count(family("symmetric:3")) == 3);
  CHECK(class_count(family("dihedral:4")) == 5);
  CHECK(class_count(family("alternating:5")) == 5);
}

TEST_CASE("orbits") {
  using Orbits = std::vector<std::vector<Point>>;
  CHECK(orbits(PermGroup({parse_cycles("(1 2)", 3)})) == Orbits{{0, 1}, {2}});
  CHECK(orbits(family("symmetric:3")) == Orbits{{0, 1, 2}});
  CHECK(orbits(PermGroup({parse_cycles("(1 2)(3 4)")})) == Orbits{{0, 1}, {2, 3}});
}

TEST_CASE("point stabilizers") {
  CHECK(point_stabilizer(family("symmetric:3"), 0).size() == 2);
  CHECK(point_stabilizer(family("cyclic:3"), 1).size() == 1);
  CHECK(point_stabilizer(family("dihedral:4"), 0).size() == 2);
}

TEST_CASE("coloring stabilizers") {
  const std::vector<std::uint32_t> c001{0, 0, 1};
  const auto st = coloring_stabilizer(family("symmetric:3"), c001);
  CHECK(st.size() == 2);
  CHECK(st.contains(parse_cycles("(1 2)", 3)));
  const std::vector<std::uint32_t> constant(4, 3);
  CHECK(coloring_stabilizer(family("dihedral:4"), constant).size() == 8);
  const std::vector<std::uint32_t> c01{0, 1};
  CHECK(coloring_stabilizer(family("cyclic:2"), c01).size() == 1);
}

TEST_CASE("property: closure agrees with the naive oracle and Lagrange holds") {
  for (const auto& spec : small_groups()) {
    CAPTURE(spec);
    const auto g = family(spec);
    const auto naive = oracle::closure(testing_support::raw_gens(g));
    REQUIRE(g.size() == naive.size());
    for (const auto& x : g.elements()) CHECK(naive.count(testing_support::raw(x)) == 1);
    CHECK(factorial(g.degree()) % g.size() == 0);
    CHECK(g.order() == g.size());
    CHECK(g.contains(Permutation::identity(g.degree())));
  }
}

TEST_CASE("property: class count equals the centralizer average") {
  for (const auto& spec : small_groups()) {
    CAPTURE(spec);
    const auto g = family(spec);
    if (g.size() > 200) continue;
    const auto naive = oracle::closure(testing_support::raw_gens(g));
    CHECK(class_count(g) == oracle::class_count_by_centralizers(naive));
    std::size_t total = 0;
    for (const auto& cls : conjugacy_classes(g)) total += cls.size();
    CHECK(total == g.size());
  }
}

TEST_CASE("property: orbit-stabilizer for points and colorings") {
  std::mt19937_64 rng(11);
  for (const auto& spec : small_groups()) {
    CAPTURE(spec);
    const auto g = family(spec);
    for (Point p = 0; p < g.degree(); ++p)
      CHECK(orbit(g, p).size() * point_stabilizer(g, p).size() == g.size());
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::uint32_t> c(g.degree());
      for (auto& x : c) x = static_cast<std::uint32_t>(rng() % 3);
      std::set<std::vector<std::uint32_t>> images;
      for (const auto& h : g.elements()) {
        std::vector<std::uint32_t> img(c.size());
        for (std::size_t j = 0; j < c.size(); ++j) img[h(static_cast<Point>(j))] = c[j];
        images.insert(img);
      }
      CHECK(images.size() * coloring_stabilizer(g, c).size() == g.size());
    }
  }
}

TEST_CASE("subgroups from member sets") {
  const auto g = family("symmetric:4");
  const auto st = point_stabilizer_indices(g, 3);
  CHECK(st.size() == 6);
  CHECK(class_count(g, st) == 3);
  const auto sub = subgroup(g, st);
  CHECK(sub.size() == 6);
  CHECK(is_abelian(family("cyclic:6")));
  CHECK_FALSE(is_abelian(g));
}
