#pragma once

#include <variant>
#include <vector>

#include "panoptigon/lattice.hpp"

namespace panoptigon {

/// {(x, y) : a*x + b*y <= c} with gcd(a, b) = 1.
struct HalfPlane {
  Integer a, b, c;

  friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
  bool contains(const LatticePoint& p) const { return a * p.x + b * p.y <= c; }
};

struct RationalPoint {
  Rational x, y;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  bool integral() const { return is_integral(x) && is_integral(y); }
};

struct RationalPolygon {
  std::vector<RationalPoint> vertices;  // CCW, lowest-then-leftmost first
  bool is_lattice = false;
};

/// One tight half-plane per edge, in vertex order (edge i runs from vertex i
/// to vertex i+1). Throws std::invalid_argument for dimension < 2.
std::vector<HalfPlane> edge_halfplanes(const LatticePolygon& q);

struct Relaxation {
  RationalPolygon polygon;
  // Edges of Q whose moved-out line meets the relaxed polygon in fewer than
  // two vertices, i.e. no longer supports an edge.
  std::vector<std::size_t> collapsed_edges;
};

/// Intersection of a*x + b*y <= c + 1 over the edges of Q.
Relaxation relax(const LatticePolygon& q);

struct NotLattice {
  RationalPoint witness;  // first non-integral vertex in CCW order
};

std::variant<LatticePolygon, NotLattice> relaxed_lattice(const LatticePolygon& q);

/// Maximal under containment among lattice polygons with the same interior
/// lattice points. Non-hyperelliptic polygons are compared against the
/// relaxation of their interior polygon; otherwise every single-point
/// extension inside the bounding box grown by margin_scale*max(width,
/// height) is tried. Throws std::invalid_argument when genus is zero.
bool is_maximal(const LatticePolygon& p, int margin_scale = 1);

/// The single-point extension search alone, for any polygon of genus >= 1.
bool is_maximal_by_extension(const LatticePolygon& p, int margin_scale = 1);

}  // namespace panoptigon
