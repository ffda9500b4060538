#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "panoptigon/classify.hpp"
#include "panoptigon/transform.hpp"

using namespace panoptigon;

namespace {

LatticePolygon unit_square() { return convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

LatticePolygon square(int n) { return convex_hull({{0, 0}, {n, 0}, {n, n}, {0, n}}); }

}  // namespace

TEST_CASE("unimodular maps") {
  CHECK_THROWS_AS(UnimodularMap({2, 0, 0, 1}, {0, 0}), std::invalid_argument);
  UnimodularMap shear({1, 3, 0, 1}, {0, 0});
  UnimodularMap swap({0, 1, 1, 0}, {5, -2});
  CHECK(shear({1, 1}) == LatticePoint{4, 1});
  CHECK(swap.after(shear)({1, 1}) == swap(shear({1, 1})));
  CHECK(swap.inverse()(swap({3, 7})) == LatticePoint{3, 7});
  CHECK(swap.after(swap.inverse()) == UnimodularMap::identity());
  CHECK(UnimodularMap::translation_by({2, 3})({1, 1}) == LatticePoint{3, 4});
}

TEST_CASE("apply") {
  LatticePolygon t2 = standard_triangle(2);
  CHECK(apply(UnimodularMap::identity(), t2) == t2);
  LatticePolygon sheared = apply(UnimodularMap({1, 3, 0, 1}, {0, 0}), t2);
  CHECK(double_area(sheared) == 4);
  CHECK(genus(sheared) == 0);
  LatticePolygon t12 = trapezoid(1, 2);
  LatticePolygon flipped = apply(UnimodularMap({0, 1, 1, 0}, {0, 0}), t12);
  CHECK(canonical_form(flipped) == canonical_form(t12));
}

TEST_CASE("functionals") {
  CHECK_THROWS_AS(Functional(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Functional(2, 4), std::invalid_argument);
  CHECK(Functional(-1, 2) == Functional(1, -2));
  CHECK(Functional::normalized(0, -6) == Functional(0, 1));
  CHECK(Functional::normalized(-4, 6) == Functional(2, -3));
}

TEST_CASE("width_wrt") {
  CHECK(width_wrt(standard_triangle(2), Functional(1, 0)) == 2);
  CHECK(width_wrt(standard_triangle(2), Functional(1, 1)) == 2);
  CHECK(width_wrt(unit_square(), Functional(1, 1)) == 2);
}

TEST_CASE("lattice_width on named families") {
  for (int d = 1; d <= 10; ++d) CHECK(lattice_width(standard_triangle(d)).width == d);
  for (int b = 1; b <= 8; ++b) {
    for (int a = 0; a <= b; ++a) {
      if (a == 0 && b <= 2) continue;  // T_1 and T_2
      CHECK(lattice_width(trapezoid(a, b)).width == 1);
    }
  }
  for (int n = 1; n <= 6; ++n) {
    WidthResult w = lattice_width(square(n));
    CHECK(w.width == n);
    CHECK(w.directions == std::vector<Functional>{Functional(0, 1), Functional(1, 0)});
    CHECK(oracle::brute_width(square(n), 2 * n + 1) == n);
  }
  CHECK(lattice_width(convex_hull({{0, 0}, {5, 0}})).width == 0);
  CHECK(lattice_width(convex_hull({{0, 0}, {5, 0}})).directions == std::vector<Functional>{Functional(0, 1)});
}

TEST_CASE("lattice_width agrees with a doubled brute-force search") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 600; ++trial) {
    LatticePolygon p = apply(oracle::random_map(rng), oracle::random_polygon(rng, 7));
    BoundingBox box = bounding_box(p);
    Integer u = std::min(box.xmax - box.xmin, box.ymax - box.ymin);
    std::set<std::pair<Integer, Integer>> minimizers;
    WidthResult w = lattice_width(p);
    REQUIRE(oracle::brute_width(p, 2 * u + 1, &minimizers) == w.width);
    REQUIRE(oracle::within_bound(w.directions, 2 * u + 1) == minimizers);
    for (const auto& f : w.directions) REQUIRE(width_wrt(p, f) == w.width);
  }
}

TEST_CASE("lattice_width finds minimizers outside the coordinate box") {
  // Width 1 along (4,1) although the polygon is 1 wide in x and 5 in y.
  WidthResult w = lattice_width(convex_hull({{3, 1}, {2, 6}, {2, 5}}));
  CHECK(w.width == 1);
  CHECK(w.directions == std::vector<Functional>{Functional(1, 0), Functional(4, 1), Functional(5, 1)});
  LatticePolygon thin = convex_hull({{0, 0}, {1, 7}, {1, 8}});
  CHECK(lattice_width(thin).width == 1);
  CHECK(lattice_width(convex_hull({{0, 0}, {1, 5}})).directions == std::vector<Functional>{Functional(5, -1)});
}

TEST_CASE("lattice_diameter") {
  CHECK(lattice_diameter(standard_triangle(2)).length == 2);
  CHECK(lattice_diameter(unit_square()).length == 1);
  CHECK(lattice_diameter(trapezoid(2, 5)).length == 5);
  CHECK(lattice_diameter(trapezoid(2, 5)).directions == std::vector<Functional>{Functional(1, 0)});
  CHECK(lattice_diameter(convex_hull({{3, 3}})).length == 0);
  CHECK(lattice_diameter(convex_hull({{3, 3}})).directions.empty());
  CHECK(lattice_diameter(convex_hull({{0, 0}, {4, 6}})).length == 2);
}

TEST_CASE("lattice_diameter agrees with the line sweep and the known bounds") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 400; ++trial) {
    LatticePolygon p = oracle::random_polygon(rng, 7);
    PointSet pts = lattice_points(p);
    Integer l = lattice_diameter(p).length;
    REQUIRE(oracle::line_sweep_diameter(pts) == l);
    REQUIRE(Integer(pts.size()) <= (l + 1) * (l + 1));
    REQUIRE(lattice_width(p).width <= 4 * l / 3 + 1);
  }
}

TEST_CASE("canonical form") {
  CHECK_THROWS_WITH_AS(canonical_form(convex_hull({{0, 0}, {2, 0}})), "canonical form requires dimension 2",
                       std::invalid_argument);
  CHECK(canonical_form(trapezoid(1, 2)) != canonical_form(trapezoid(2, 2)));
  CHECK(are_equivalent(trapezoid(1, 2), trapezoid(1, 2)));
  CHECK_FALSE(are_equivalent(standard_triangle(3), unit_square()));
  CHECK_FALSE(are_equivalent(convex_hull({{0, 0}, {0, -1}, {3, -1}}), convex_hull({{0, 0}, {0, -1}, {4, -1}})));
}

TEST_CASE("canonical form is invariant and idempotent, with a valid map") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    LatticePolygon p = oracle::random_polygon(rng, 6);
    UnimodularMap t = oracle::random_map(rng);
    LatticePolygon q = apply(t, p);
    CanonicalResult c = canonical_map(p);
    REQUIRE(apply(c.map, p) == c.polygon);
    REQUIRE(canonical_form(q) == c.polygon);
    REQUIRE(canonical_form(c.polygon) == c.polygon);
    REQUIRE(are_equivalent(p, q));
    auto e = equivalence(p, q);
    REQUIRE(e.has_value());
    REQUIRE(apply(*e, p) == q);
    // Invariants survive the map.
    REQUIRE(double_area(q) == double_area(p));
    REQUIRE(genus(q) == genus(p));
    REQUIRE(lattice_width(q).width == lattice_width(p).width);
    REQUIRE(lattice_diameter(q).length == lattice_diameter(p).length);
    REQUIRE(edge_lengths(canonical_form(q)).size() == p.size());
  }
}

TEST_CASE("are_equivalent agrees with vertex matching") {
  std::mt19937_64 rng(14);
  int equal = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    LatticePolygon p = oracle::random_polygon(rng, 3);
    LatticePolygon q = oracle::random_polygon(rng, 3);
    if (trial % 4 == 0) q = apply(oracle::random_map(rng), p);
    bool eq = are_equivalent(p, q);
    REQUIRE(eq == oracle::equivalent_by_matching(p, q));
    REQUIRE(eq == equivalence(p, q).has_value());
    equal += eq;
  }
  CHECK(equal > 750);
}
