#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "panoptigon/census.hpp"
#include "panoptigon/transform.hpp"

using namespace panoptigon;
using K = HyperellipticKind;

namespace {

const RawEnumeration& raw() {
  static const RawEnumeration r = enumerate_raw();
  return r;
}

const FullCensus& full() {
  static const FullCensus c = full_panoptigon_census(2);
  return c;
}

}  // namespace

TEST_CASE("candidate frame") {
  CandidateFrame f = candidate_point_set();
  CHECK(f.fixed.size() + f.optional.size() == 30);
  CHECK(f.fixed == PointSet{{-1, -1}, {0, -1}, {0, 0}, {1, -1}, {2, -1}});
  PointSet low;
  for (const auto& s : {f.fixed, f.optional}) {
    for (const auto& p : s) {
      if (p.y == -1) low.push_back(p);
      CHECK(p.y >= -2);
      if (p != LatticePoint{0, 0}) CHECK(is_visible({0, 0}, p));
      CHECK(p != LatticePoint{-2, 0});
    }
  }
  CHECK(make_point_set(low) == PointSet{{-1, -1}, {0, -1}, {1, -1}, {2, -1}, {3, -1}, {4, -1}, {5, -1}});
}

TEST_CASE("raw enumeration") {
  const RawEnumeration& r = raw();
  CHECK(r.polygons.size() == 215);
  CHECK(r.closed_sets == 345);
  CHECK(r.genus_filtered.size() == 329);
  std::size_t most = 0;
  for (const auto& p : r.polygons) {
    PointSet pts = lattice_points(p);
    most = std::max(most, pts.size());
    for (int x = -1; x <= 2; ++x) REQUIRE(contains(pts, {x, -1}));
    REQUIRE(lattice_diameter(p).length >= 3);
    REQUIRE(lattice_width(p).width >= 3);
    REQUIRE(visible_from({0, 0}, pts).size() == pts.size());
    REQUIRE(pts.size() <= 13);
  }
  CHECK(most == 13);
}

TEST_CASE("exhaustive sweep agrees with incremental enumeration") {
  RawEnumeration slow = enumerate_raw_exhaustive(2);
  CHECK(slow.polygons == raw().polygons);
  CHECK(slow.closed_sets == raw().closed_sets);
  CHECK(slow.genus_filtered == raw().genus_filtered);
}

TEST_CASE("non-hyperelliptic census records") {
  const auto& nh = full().nonhyperelliptic;
  std::set<LatticePolygon> canon;
  std::map<int, int> by_count;
  for (const auto& r : nh) {
    canon.insert(r.canonical);
    by_count[static_cast<int>(r.lattice_point_count)]++;
    REQUIRE(canonical_form(r.canonical) == r.canonical);
    REQUIRE_FALSE(r.hyperelliptic);
    REQUIRE(is_panoptigon(r.canonical).is_panoptigon);
    REQUIRE(r.panoptigon_points == is_panoptigon(r.canonical).panoptigon_points);
    REQUIRE(r.genus == genus(r.canonical));
    REQUIRE(r.max_polygon.has_value());
    REQUIRE(r.relaxation_lattice != r.relaxation_witness.has_value());
    if (r.lattice_point_count >= 12) REQUIRE_FALSE(r.relaxation_lattice);
  }
  CHECK(canon.size() == nh.size());
  CHECK(by_count[12] == 15);
  CHECK(by_count[13] == 8);
  CHECK(by_count.rbegin()->first == 13);
  // Sorted by lattice-point count, then canonical vertices.
  for (std::size_t i = 1; i < nh.size(); ++i) {
    REQUIRE((nh[i - 1].lattice_point_count < nh[i].lattice_point_count ||
             (nh[i - 1].lattice_point_count == nh[i].lattice_point_count && nh[i - 1].canonical < nh[i].canonical)));
  }
  CHECK(full().lw3plus.size() == nh.size() + 1);
}

TEST_CASE("census is independent of the thread count") {
  auto one = nonhyperelliptic_census(1);
  auto three = nonhyperelliptic_census(3);
  REQUIRE(one.size() == three.size());
  for (std::size_t i = 0; i < one.size(); ++i) REQUIRE(one[i].canonical == three[i].canonical);
}

TEST_CASE("extension maximality agrees with relaxation on census interiors") {
  for (const auto& r : full().nonhyperelliptic) {
    REQUIRE(is_maximal(r.canonical) == is_maximal_by_extension(r.canonical));
    if (r.max_polygon) {
      REQUIRE(is_maximal(*r.max_polygon));
      REQUIRE(is_maximal_by_extension(*r.max_polygon));
      for (const auto& v : r.canonical.vertices()) REQUIRE(contains(*r.max_polygon, v));
    }
  }
}

TEST_CASE("lattice width grows by two over the interior") {
  std::vector<LatticePolygon> corpus;
  for (const auto& r : full().nonhyperelliptic) corpus.push_back(r.canonical);
  std::mt19937_64 rng(2);
  while (corpus.size() < 600) {
    LatticePolygon p = oracle::random_polygon(rng, 8);
    if (!is_hyperelliptic(p)) corpus.push_back(p);
  }
  for (int d = 4; d <= 9; ++d) corpus.push_back(standard_triangle(d));
  for (const auto& p : corpus) {
    Integer w = lattice_width(p).width;
    Integer inner = lattice_width(*interior_polygon(p)).width;
    REQUIRE(w == inner + (are_equivalent(p, standard_triangle(w)) ? 3 : 2));
  }
}

TEST_CASE("sporadic lattice-diameter-2 panoptigons") {
  auto sp = sporadic_ld2();
  REQUIRE(sp.size() == 3);
  for (const auto& r : sp) {
    CHECK(r.lattice_diameter == 2);
    CHECK(r.lattice_width == 3);
    CHECK_FALSE(r.hyperelliptic);
    CHECK(is_panoptigon(r.canonical).is_panoptigon);
  }
  ContainerSearch cs = sporadic_container_search();
  CHECK(cs.containers.size() == 5);
  std::set<LatticePolygon> a, b;
  for (const auto& r : sp) a.insert(r.canonical);
  for (const auto& r : cs.found) b.insert(r.canonical);
  CHECK(a == b);
}

TEST_CASE("genus-1 enumeration") {
  const Genus1Enumeration& e = genus1_polygons();
  CHECK(e.classes.size() == 16);
  std::size_t lw2 = 0;
  for (const auto& p : e.classes) {
    REQUIRE(genus(p) == 1);
    REQUIRE(is_panoptigon(p).is_panoptigon);
    lw2 += lattice_width(p).width == 2;
  }
  CHECK(lw2 == 15);
  std::size_t n = e.class_count_by_width.size();
  REQUIRE(n >= 3);
  CHECK(e.class_count_by_width[n - 1] == e.class_count_by_width[n - 2]);
  CHECK(e.class_count_by_width[n - 2] == e.class_count_by_width[n - 3]);
}

TEST_CASE("maximal lattice-width-3 polygons") {
  CHECK(maximal_lw3_count_formula(10) == 2);
  CHECK(maximal_lw3_count_formula(4) == 1);
  CHECK_THROWS_AS(maximal_lw3_count_formula(3), std::invalid_argument);
  CHECK_THROWS_AS(maximal_lw3(2), std::invalid_argument);
  auto g5 = maximal_lw3(5);
  LatticePolygon r12 = std::get<LatticePolygon>(relaxed_lattice(trapezoid(1, 2)));
  bool has = false;
  for (const auto& p : g5) has = has || are_equivalent(p, r12);
  CHECK(has);
  CHECK(std::holds_alternative<NotLattice>(relaxed_lattice(trapezoid(0, 3))));
  for (int g = 3; g <= 14; ++g) {
    for (const auto& p : maximal_lw3(g)) {
      REQUIRE(genus(p) == g);
      REQUIRE(lattice_width(p).width == 3);
      REQUIRE(is_maximal(p));
      REQUIRE(lattice_width(*interior_polygon(p)).width == 1);
    }
  }
}

TEST_CASE("relax_condition") {
  CHECK(relax_condition({K::Type1, 4, 6, 0, 0}));
  CHECK_FALSE(relax_condition({K::Type1, 4, 7, 0, 0}));
  CHECK(relax_condition({K::Type3, 4, 2, 2, 0}));
  CHECK_THROWS_AS(relax_condition({K::Type1, 4, 1, 0, 0}), std::invalid_argument);
  for (int g = 2; g <= 10; ++g) {
    for (const auto& f : hyperelliptic_forms(g)) {
      bool lattice = std::holds_alternative<LatticePolygon>(relaxed_lattice(hyperelliptic_polygon(f)));
      REQUIRE(relax_condition(f) == lattice);
    }
  }
}

TEST_CASE("maximal lattice-width-4 polygons") {
  auto g3 = maximal_lw4(3);
  bool has_t4 = false;
  for (const auto& p : g3) has_t4 = has_t4 || are_equivalent(p, standard_triangle(4));
  CHECK(has_t4);
  CHECK_THROWS_AS(maximal_lw4(2), std::invalid_argument);
  for (int g = 3; g <= 8; ++g) {
    std::set<LatticePolygon> canon;
    for (const auto& p : maximal_lw4(g)) {
      REQUIRE(genus(p) == g);
      REQUIRE(lattice_width(p).width == 4);
      REQUIRE(is_maximal(p));
      canon.insert(canonical_form(p));
      LatticePolygon inner = *interior_polygon(p);
      if (is_hyperelliptic(inner) && lattice_width(inner).width == 2 && genus(inner) >= 2) {
        HyperellipticForm f = hyperelliptic_normal_form(inner);
        REQUIRE(are_equivalent(inner, hyperelliptic_polygon(f)));
        REQUIRE(relax_condition(f));
      }
    }
    REQUIRE(canon.size() == maximal_lw4(g).size());
  }
}

TEST_CASE("polygons of lattice width at most 2 with lattice relaxation") {
  CorollaryReport c = corollary_lw12_check();
  CHECK(c.max_lattice_points <= 11);
  CHECK(c.without_height1_point == 0);
  bool t26 = false, type1 = false;
  for (const auto& e : c.entries) {
    REQUIRE(e.lattice_points == lattice_point_count(e.polygon));
    REQUIRE(is_panoptigon(e.polygon).is_panoptigon);
    REQUIRE(std::holds_alternative<LatticePolygon>(relaxed_lattice(e.polygon)));
    if (are_equivalent(e.polygon, trapezoid(2, 6))) t26 = e.lattice_points == 10;
    if (genus(e.polygon) == 3 && e.lattice_points == 11) type1 = true;
  }
  CHECK(t26);
  CHECK(type1);
}

TEST_CASE("big-face obstruction") {
  CHECK(big_face_obstruction(standard_triangle(4)).verdict == Verdict::Passes);
  CHECK_THROWS_AS(big_face_obstruction(standard_triangle(3)), std::invalid_argument);
  for (int g : {12, 13, 14, 20}) {
    LatticePolygon p = hyperelliptic_polygon({K::Type1, g, g, 0, 0});
    ObstructionReport r = big_face_obstruction(p);
    CHECK(r.verdict == Verdict::Fails);
    CHECK_FALSE(r.reasons.empty());
  }
  auto w = obstruction_witnesses();
  for (int g = 2; g <= 11; ++g) {
    REQUIRE(w.count(g) == 1);
    REQUIRE(genus(w.at(g)) == g);
    REQUIRE(big_face_obstruction(w.at(g)).verdict == Verdict::Passes);
  }
}
