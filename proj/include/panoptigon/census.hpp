#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "panoptigon/classify.hpp"
#include "panoptigon/lattice.hpp"
#include "panoptigon/relaxation.hpp"

namespace panoptigon {

struct CandidateFrame {
  PointSet fixed;     // (0,0), (-1,-1), (0,-1), (1,-1), (2,-1)
  PointSet optional;  // the remaining candidates, all visible from the origin
};

CandidateFrame candidate_point_set();

struct RawEnumeration {
  // Closed polygons inside the frame with lattice width at least 3.
  std::vector<LatticePolygon> polygons;
  // Closed polygons with dimension 2 and genus at least 1, the looser filter.
  std::vector<LatticePolygon> genus_filtered;
  std::size_t closed_sets = 0;
};

/// Incremental growth of convex-closed sets from the fixed points.
RawEnumeration enumerate_raw();

/// Checks all 2^|optional| subsets directly.
RawEnumeration enumerate_raw_exhaustive(unsigned threads);

struct CensusRecord {
  LatticePolygon canonical;
  Integer lattice_point_count;
  Integer genus;
  Integer lattice_width;
  Integer lattice_diameter;
  bool hyperelliptic = false;
  PointSet panoptigon_points;
  bool relaxation_lattice = false;
  std::optional<RationalPoint> relaxation_witness;
  std::optional<LatticePolygon> max_polygon;  // relaxation of the interior polygon
};

/// Record of the canonical representative of P; requires dimension 2.
CensusRecord make_record(const LatticePolygon& p);

/// Orders by (lattice_point_count, canonical).
void sort_records(std::vector<CensusRecord>& records);

/// Non-hyperelliptic classes among the raw polygons.
std::vector<CensusRecord> nonhyperelliptic_census(unsigned threads = 1);

/// conv((0,1),(0,3),(4,0)), conv((1,0),(2,0),(3,1),(0,3)), conv((0,1),(0,2),(2,3),(3,0)).
std::vector<CensusRecord> sporadic_ld2();

struct ContainerSearch {
  std::vector<LatticePolygon> containers;
  // Non-hyperelliptic panoptigon classes of lattice diameter at most 2 found
  // among the convex subpolygons of the containers.
  std::vector<CensusRecord> found;
};

ContainerSearch sporadic_container_search();

struct FullCensus {
  std::vector<CensusRecord> nonhyperelliptic;
  std::vector<CensusRecord> lw3plus;  // nonhyperelliptic plus T_3
};

FullCensus full_panoptigon_census(unsigned threads = 1);

struct Genus1Enumeration {
  std::vector<LatticePolygon> classes;  // canonical forms, sorted
  std::vector<std::size_t> class_count_by_width;
  int final_width = 0;
};

/// Genus-1 classes found in the strips [0,W] x [0,3], growing W until the
/// class count is unchanged for two consecutive widths.
const Genus1Enumeration& genus1_polygons();

/// Relaxations of trapezoids T_{a,b} with a+b+2 = g that are lattice
/// polygons, one per class. Requires g >= 3.
std::vector<LatticePolygon> maximal_lw3(int g);

/// floor((g-2)/2) - floor(g/3) + 1; requires g >= 4.
Integer maximal_lw3_count_formula(int g);

/// Whether the relaxation of hyperelliptic_polygon(f) is a lattice polygon:
/// Type1: 2i <= 3g+1; Type2 and Type3: 2i >= g-1 and 2j >= g-1.
bool relax_condition(const HyperellipticForm& f);

/// Maximal polygons of lattice width 4 and genus g >= 3: T_4, relaxations of
/// genus-1 polygons of lattice width 2, and relaxations of hyperelliptic
/// polygons whose relaxation is a lattice polygon. One per class.
std::vector<LatticePolygon> maximal_lw4(int g);

struct CorollaryEntry {
  std::string family;
  LatticePolygon polygon;
  Integer lattice_points;
  bool has_height1_panoptigon_point = true;  // hyperelliptic entries only
};

struct CorollaryReport {
  std::vector<CorollaryEntry> entries;
  Integer max_lattice_points;
  // Hyperelliptic panoptigon forms with a lattice relaxation but no
  // panoptigon point on the line of interior points.
  std::size_t without_height1_point = 0;
  int hyperelliptic_genus_bound = 0;
};

/// Panoptigons of lattice width at most 2 whose relaxation is a lattice
/// polygon. Hyperelliptic forms are scanned up to a fixed genus bound.
CorollaryReport corollary_lw12_check();

enum class Verdict { Passes, Fails };

struct ObstructionReport {
  Verdict verdict = Verdict::Passes;
  std::vector<std::string> reasons;
  bool interior_panoptigon = false;
};

/// Requires genus(P) >= 2.
ObstructionReport big_face_obstruction(const LatticePolygon& p);

/// One polygon per genus 2..11 whose interior points form a panoptigon.
std::map<int, LatticePolygon> obstruction_witnesses();

struct CensusSummary {
  std::size_t raw = 0;
  std::size_t raw_genus_filter = 0;
  std::size_t nonhyperelliptic = 0;
  std::size_t sporadic = 0;
  std::size_t total = 0;
  std::size_t lw3plus = 0;
  std::map<std::string, std::size_t> by_count;
};

}  // namespace panoptigon
