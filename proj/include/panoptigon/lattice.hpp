#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "panoptigon/integer.hpp"

namespace panoptigon {

struct LatticePoint {
  Integer x;
  Integer y;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend std::strong_ordering operator<=>(const LatticePoint&, const LatticePoint&) = default;

  LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
  LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
};

/// Sorted (x, then y), duplicate-free.
using PointSet = std::vector<LatticePoint>;

PointSet make_point_set(std::vector<LatticePoint> points);
bool contains(const PointSet& set, const LatticePoint& p);

/// Convex lattice polygon, possibly degenerate (a point or a segment).
///
/// Vertices are strictly CCW with no three consecutive collinear, starting
/// at the lowest-then-leftmost vertex. Instances are only produced by
/// convex_hull, so every value is normalized.
class LatticePolygon {
 public:
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  /// 0 for a point, 1 for a segment, 2 otherwise.
  int dimension() const {
    return vertices_.size() >= 3 ? 2 : static_cast<int>(vertices_.size()) - 1;
  }

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;
  friend std::strong_ordering operator<=>(const LatticePolygon& a, const LatticePolygon& b);

 private:
  friend LatticePolygon convex_hull(std::span<const LatticePoint> points);
  explicit LatticePolygon(std::vector<LatticePoint> v) : vertices_(std::move(v)) {}

  std::vector<LatticePoint> vertices_;
};

/// Two lattice points see each other when no lattice point lies strictly
/// between them. A point sees itself.
bool is_visible(const LatticePoint& p, const LatticePoint& q);

/// Throws std::invalid_argument("empty point set") on empty input.
LatticePolygon convex_hull(std::span<const LatticePoint> points);
LatticePolygon convex_hull(std::initializer_list<LatticePoint> points);

PointSet lattice_points(const LatticePolygon& p);
PointSet boundary_lattice_points(const LatticePolygon& p);
PointSet interior_lattice_points(const LatticePolygon& p);

/// Twice the area; zero for degenerate polygons.
Integer double_area(const LatticePolygon& p);

Integer genus(const LatticePolygon& p);

/// Sum over edges of the lattice length gcd(|dx|, |dy|).
Integer boundary_count(const LatticePolygon& p);

/// |P ∩ Z²| via Pick's formula, without enumerating points.
Integer lattice_point_count(const LatticePolygon& p);

/// Hull of the interior lattice points; empty when the genus is zero.
std::optional<LatticePolygon> interior_polygon(const LatticePolygon& p);

PointSet visible_from(const LatticePoint& p, const PointSet& s);

/// Closed containment test.
bool contains(const LatticePolygon& poly, const LatticePoint& p);

/// Lattice lengths of the edges in vertex order (one entry for a segment,
/// none for a point).
std::vector<Integer> edge_lengths(const LatticePolygon& p);

struct BoundingBox {
  Integer xmin, xmax, ymin, ymax;
};
BoundingBox bounding_box(const LatticePolygon& p);

LatticePolygon translate(const LatticePolygon& p, const LatticePoint& by);

}  // namespace panoptigon
