#pragma once

// Slow, independent reference computations used only by the tests. None of
// them call the routine they check.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "panoptigon/lattice.hpp"
#include "panoptigon/transform.hpp"

namespace oracle {

using panoptigon::Integer;
using panoptigon::LatticePoint;
using panoptigon::LatticePolygon;

inline Integer orient(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  Integer l = (a.x - o.x) * (b.y - o.y);
  Integer r = (a.y - o.y) * (b.x - o.x);
  return l - r;
}

// Bounding-box scan with orientation tests against every edge.
inline std::vector<LatticePoint> box_points(const LatticePolygon& p, bool strict) {
  const auto& v = p.vertices();
  Integer xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
  for (const auto& q : v) {
    xmin = std::min(xmin, q.x);
    xmax = std::max(xmax, q.x);
    ymin = std::min(ymin, q.y);
    ymax = std::max(ymax, q.y);
  }
  std::vector<LatticePoint> out;
  for (Integer x = xmin; x <= xmax; ++x) {
    for (Integer y = ymin; y <= ymax; ++y) {
      LatticePoint c{x, y};
      bool in = true;
      if (v.size() == 1) {
        in = !strict && c == v[0];
      } else if (v.size() == 2) {
        in = !strict && orient(v[0], v[1], c) == 0;
      } else {
        for (std::size_t i = 0; i < v.size(); ++i) {
          Integer o = orient(v[i], v[(i + 1) % v.size()], c);
          if (o < 0 || (strict && o == 0)) in = false;
        }
      }
      if (in) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Walks the segment in max(|dx|,|dy|) equal steps and looks for a lattice
// point strictly between the ends.
inline bool rasterized_visible(const LatticePoint& p, const LatticePoint& q) {
  Integer dx = q.x - p.x, dy = q.y - p.y;
  Integer n = std::max(abs(dx), abs(dy));
  for (Integer k = 1; k < n; ++k) {
    if ((dx * k) % n == 0 && (dy * k) % n == 0) return false;
  }
  return true;
}

// Minimum width over every primitive functional with |alpha|,|beta| <= bound.
inline Integer brute_width(const LatticePolygon& p, const Integer& bound,
                           std::set<std::pair<Integer, Integer>>* minimizers = nullptr) {
  std::optional<Integer> best;
  std::set<std::pair<Integer, Integer>> found;
  for (Integer a = -bound; a <= bound; ++a) {
    for (Integer b = -bound; b <= bound; ++b) {
      if (a < 0 || (a == 0 && b <= 0)) continue;
      if (panoptigon::gcd(a, b) != 1) continue;
      Integer lo = a * p.vertices()[0].x + b * p.vertices()[0].y, hi = lo;
      for (const auto& v : p.vertices()) {
        Integer val = a * v.x + b * v.y;
        lo = std::min(lo, val);
        hi = std::max(hi, val);
      }
      Integer w = hi - lo;
      if (!best || w < *best) {
        best = w;
        found.clear();
      }
      if (w == *best) found.insert({a, b});
    }
  }
  if (minimizers) *minimizers = found;
  return *best;
}

// The functionals of `all` inside the brute-force box of that bound.
inline std::set<std::pair<Integer, Integer>> within_bound(const std::vector<panoptigon::Functional>& all,
                                                          const Integer& bound) {
  std::set<std::pair<Integer, Integer>> out;
  for (const auto& f : all) {
    if (abs(f.alpha()) <= bound && abs(f.beta()) <= bound) out.insert({f.alpha(), f.beta()});
  }
  return out;
}

// Longest lattice segment by grouping the lattice points along every line
// of each slope that joins two of them.
inline Integer line_sweep_diameter(const std::vector<LatticePoint>& pts) {
  Integer best = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Integer dx = pts[j].x - pts[i].x, dy = pts[j].y - pts[i].y;
      int on_line = 0;
      for (const auto& q : pts) {
        if (dy * (q.x - pts[i].x) - dx * (q.y - pts[i].y) == 0) ++on_line;
      }
      best = std::max(best, Integer(on_line - 1));
    }
  }
  return best;
}

// Affine equivalence by matching three consecutive vertices in every
// rotation and orientation, then checking the whole vertex set.
inline bool equivalent_by_matching(const LatticePolygon& p, const LatticePolygon& q) {
  using panoptigon::Rational;
  if (p.size() != q.size() || p.size() < 3) return false;
  const auto& P = p.vertices();
  const auto& Q = q.vertices();
  const std::size_t n = P.size();
  std::set<LatticePoint> target(Q.begin(), Q.end());
  LatticePoint u = P[1] - P[0], w = P[2] - P[0];
  Integer det = u.x * w.y - u.y * w.x;
  for (std::size_t i = 0; i < n; ++i) {
    for (int d : {1, -1}) {
      const LatticePoint& b0 = Q[i];
      LatticePoint U = Q[(i + n + d) % n] - b0;
      LatticePoint W = Q[(i + 2 * n + 2 * d) % n] - b0;
      // A [u w] = [U W]  =>  A = [U W] adj([u w]) / det
      Integer a00 = U.x * w.y - W.x * u.y, a01 = -U.x * w.x + W.x * u.x;
      Integer a10 = U.y * w.y - W.y * u.y, a11 = -U.y * w.x + W.y * u.x;
      if (a00 % det != 0 || a01 % det != 0 || a10 % det != 0 || a11 % det != 0) continue;
      a00 /= det;
      a01 /= det;
      a10 /= det;
      a11 /= det;
      Integer dd = a00 * a11 - a01 * a10;
      if (dd != 1 && dd != -1) continue;
      std::set<LatticePoint> image;
      for (const auto& v : P) {
        LatticePoint r = v - P[0];
        image.insert({a00 * r.x + a01 * r.y + b0.x, a10 * r.x + a11 * r.y + b0.y});
      }
      if (image == target) return true;
    }
  }
  return false;
}

inline panoptigon::UnimodularMap random_map(std::mt19937_64& rng) {
  using panoptigon::Matrix2;
  std::uniform_int_distribution<int> pick(0, 5), shift(-7, 7), steps(1, 6);
  Matrix2 m{1, 0, 0, 1};
  const Matrix2 gens[] = {{1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, 1, 1}, {1, 0, -1, 1}, {0, 1, 1, 0}, {-1, 0, 0, 1}};
  for (int s = steps(rng); s > 0; --s) m = gens[pick(rng)] * m;
  return {m, {shift(rng), shift(rng)}};
}

// Hull of a handful of random points in [0, size]^2, retried until it is
// two-dimensional.
inline LatticePolygon random_polygon(std::mt19937_64& rng, int size = 6) {
  std::uniform_int_distribution<int> coord(0, size), count(3, 7);
  for (;;) {
    std::vector<LatticePoint> pts;
    for (int k = count(rng); k > 0; --k) pts.push_back({coord(rng), coord(rng)});
    LatticePolygon p = panoptigon::convex_hull(pts);
    if (p.dimension() == 2) return p;
  }
}

}  // namespace oracle
