#include "panoptigon/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "panoptigon/detail/hull.hpp"

namespace panoptigon {

namespace {

struct Row {
  Integer y;
  Integer lo;
  Integer hi;
};

// Per-row integer x-ranges of a 2-dimensional polygon, from the exact
// rational edge crossings. With strict set, only interior points count.
std::vector<Row> row_ranges(const LatticePolygon& poly, bool strict) {
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  BoundingBox box = bounding_box(poly);
  std::vector<Row> rows;
  for (Integer y = box.ymin; y <= box.ymax; ++y) {
    std::optional<Integer> lo, hi;
    bool empty = false;
    for (std::size_t i = 0; i < n && !empty; ++i) {
      const LatticePoint& p = v[i];
      const LatticePoint& q = v[(i + 1) % n];
      // Interior lies to the left of p->q:  a*x + b*y <= c.
      Integer a = q.y - p.y;
      Integer b = p.x - q.x;
      Integer c = a * p.x + b * p.y;
      Integer rhs = c - b * y;
      if (strict) rhs -= 1;
      if (a == 0) {
        if (rhs < 0) empty = true;
      } else if (a > 0) {
        Integer bound = floor_div(rhs, a);
        if (!hi || bound < *hi) hi = bound;
      } else {
        Integer bound = ceil_div(rhs, a);
        if (!lo || bound > *lo) lo = bound;
      }
    }
    if (empty || !lo || !hi || *lo > *hi) continue;
    rows.push_back({y, *lo, *hi});
  }
  return rows;
}

PointSet segment_points(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint d = b - a;
  Integer g = gcd(d.x, d.y);
  PointSet out;
  if (g == 0) {
    out.push_back(a);
    return out;
  }
  LatticePoint step{d.x / g, d.y / g};
  LatticePoint cur = a;
  for (Integer t = 0; t <= g; ++t) {
    out.push_back(cur);
    cur = cur + step;
  }
  return out;
}

}  // namespace

std::strong_ordering operator<=>(const LatticePolygon& a, const LatticePolygon& b) {
  return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                b.vertices_.begin(), b.vertices_.end());
}

PointSet make_point_set(std::vector<LatticePoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

bool contains(const PointSet& set, const LatticePoint& p) {
  return std::binary_search(set.begin(), set.end(), p);
}

bool is_visible(const LatticePoint& p, const LatticePoint& q) {
  if (p == q) return true;
  return gcd(p.x - q.x, p.y - q.y) == 1;
}

LatticePolygon convex_hull(std::span<const LatticePoint> points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  std::vector<LatticePoint> pts(points.begin(), points.end());
  return LatticePolygon(detail::monotone_chain(std::move(pts)));
}

LatticePolygon convex_hull(std::initializer_list<LatticePoint> points) {
  return convex_hull(std::span<const LatticePoint>(points.begin(), points.size()));
}

PointSet lattice_points(const LatticePolygon& p) {
  const auto& v = p.vertices();
  if (p.dimension() == 0) return {v[0]};
  if (p.dimension() == 1) return make_point_set(segment_points(v[0], v[1]));
  PointSet out;
  for (const Row& r : row_ranges(p, false)) {
    for (Integer x = r.lo; x <= r.hi; ++x) out.push_back({x, r.y});
  }
  return make_point_set(std::move(out));
}

PointSet boundary_lattice_points(const LatticePolygon& p) {
  const auto& v = p.vertices();
  if (p.dimension() < 2) return lattice_points(p);
  PointSet out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    PointSet edge = segment_points(v[i], v[(i + 1) % v.size()]);
    out.insert(out.end(), edge.begin(), edge.end());
  }
  return make_point_set(std::move(out));
}

PointSet interior_lattice_points(const LatticePolygon& p) {
  if (p.dimension() < 2) return {};
  PointSet out;
  for (const Row& r : row_ranges(p, true)) {
    for (Integer x = r.lo; x <= r.hi; ++x) out.push_back({x, r.y});
  }
  return make_point_set(std::move(out));
}

Integer double_area(const LatticePolygon& p) {
  if (p.dimension() < 2) return 0;
  const auto& v = p.vertices();
  Integer sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    sum += a.x * b.y - a.y * b.x;
  }
  return sum;
}

Integer genus(const LatticePolygon& p) {
  if (p.dimension() < 2) return 0;
  Integer count = 0;
  for (const Row& r : row_ranges(p, true)) count += r.hi - r.lo + 1;
  return count;
}

Integer boundary_count(const LatticePolygon& p) {
  const auto& v = p.vertices();
  if (p.dimension() == 0) return 1;
  if (p.dimension() == 1) return gcd(v[1].x - v[0].x, v[1].y - v[0].y) + 1;
  Integer sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    sum += gcd(b.x - a.x, b.y - a.y);
  }
  return sum;
}

Integer lattice_point_count(const LatticePolygon& p) {
  if (p.dimension() < 2) return boundary_count(p);
  Integer b = boundary_count(p);
  // 2A = 2i + b - 2  =>  i + b = (2A + b + 2) / 2
  return (double_area(p) + b + 2) / 2;
}

std::optional<LatticePolygon> interior_polygon(const LatticePolygon& p) {
  PointSet inner = interior_lattice_points(p);
  if (inner.empty()) return std::nullopt;
  return convex_hull(inner);
}

PointSet visible_from(const LatticePoint& p, const PointSet& s) {
  PointSet out;
  for (const auto& q : s) {
    if (is_visible(p, q)) out.push_back(q);
  }
  return out;
}

bool contains(const LatticePolygon& poly, const LatticePoint& p) {
  const auto& v = poly.vertices();
  switch (poly.dimension()) {
    case 0:
      return v[0] == p;
    case 1: {
      if (detail::cross(v[0], v[1], p) != 0) return false;
      return std::min(v[0].x, v[1].x) <= p.x && p.x <= std::max(v[0].x, v[1].x) &&
             std::min(v[0].y, v[1].y) <= p.y && p.y <= std::max(v[0].y, v[1].y);
    }
    default:
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (detail::cross(v[i], v[(i + 1) % v.size()], p) < 0) return false;
      }
      return true;
  }
}

std::vector<Integer> edge_lengths(const LatticePolygon& p) {
  const auto& v = p.vertices();
  std::vector<Integer> out;
  if (p.dimension() == 0) return out;
  if (p.dimension() == 1) {
    out.push_back(gcd(v[1].x - v[0].x, v[1].y - v[0].y));
    return out;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    out.push_back(gcd(b.x - a.x, b.y - a.y));
  }
  return out;
}

BoundingBox bounding_box(const LatticePolygon& p) {
  const auto& v = p.vertices();
  BoundingBox box{v[0].x, v[0].x, v[0].y, v[0].y};
  for (const auto& q : v) {
    box.xmin = std::min(box.xmin, q.x);
    box.xmax = std::max(box.xmax, q.x);
    box.ymin = std::min(box.ymin, q.y);
    box.ymax = std::max(box.ymax, q.y);
  }
  return box;
}

LatticePolygon translate(const LatticePolygon& p, const LatticePoint& by) {
  std::vector<LatticePoint> moved;
  moved.reserve(p.size());
  for (const auto& q : p.vertices()) moved.push_back(q + by);
  return convex_hull(moved);
}

}  // namespace panoptigon
