#pragma once

#include <algorithm>
#include <vector>

namespace panoptigon::detail {

template <class Point>
using coord_t = decltype(Point::x);

template <class Point>
coord_t<Point> cross(const Point& o, const Point& a, const Point& b) {
  coord_t<Point> lhs = (a.x - o.x) * (b.y - o.y);
  coord_t<Point> rhs = (a.y - o.y) * (b.x - o.x);
  return lhs - rhs;
}

template <class Point>
bool lower_left(const Point& a, const Point& b) {
  if (a.y != b.y) return a.y < b.y;
  return a.x < b.x;
}

// Andrew's monotone chain. Collinear and duplicate points are dropped, the
// result is strictly CCW and starts at the lowest-then-leftmost vertex.
// One point for dimension 0, two for dimension 1.
template <class Point>
std::vector<Point> monotone_chain(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Point& a, const Point& b) {
                          return a.x == b.x && a.y == b.y;
                        }),
            pts.end());
  if (pts.size() <= 1) return pts;

  std::vector<Point> hull;
  hull.reserve(2 * pts.size());
  for (const auto& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  const std::size_t lower = hull.size() + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), *it) <= 0) {
      hull.pop_back();
    }
    hull.push_back(*it);
  }
  hull.pop_back();

  auto first = std::min_element(hull.begin(), hull.end(), lower_left<Point>);
  std::rotate(hull.begin(), first, hull.end());
  return hull;
}

}  // namespace panoptigon::detail
