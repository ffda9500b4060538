#include "panoptigon/detail/frame.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "panoptigon/detail/hull.hpp"

namespace panoptigon::detail {

namespace {

std::int64_t floor_div64(std::int64_t n, std::int64_t d) {
  std::int64_t q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

std::int64_t ceil_div64(std::int64_t n, std::int64_t d) { return -floor_div64(-n, d); }

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// Calls emit(x, y) for every lattice point of the hull (closed), row by row.
template <class Emit>
bool for_each_point(const std::vector<P64>& hull, Emit&& emit) {
  if (hull.size() == 1) return emit(hull[0].x, hull[0].y);
  if (hull.size() == 2) {
    std::int64_t dx = hull[1].x - hull[0].x, dy = hull[1].y - hull[0].y;
    std::int64_t g = gcd64(dx, dy);
    for (std::int64_t t = 0; t <= g; ++t) {
      if (!emit(hull[0].x + t * dx / g, hull[0].y + t * dy / g)) return false;
    }
    return true;
  }
  std::int64_t ymin = hull[0].y, ymax = hull[0].y;
  for (const auto& p : hull) ymax = std::max(ymax, p.y);
  const std::size_t n = hull.size();
  for (std::int64_t y = ymin; y <= ymax; ++y) {
    std::int64_t lo = INT64_MIN, hi = INT64_MAX;
    bool empty = false;
    for (std::size_t i = 0; i < n; ++i) {
      const P64& p = hull[i];
      const P64& q = hull[(i + 1) % n];
      std::int64_t a = q.y - p.y, b = p.x - q.x;
      std::int64_t rhs = a * p.x + b * p.y - b * y;
      if (a == 0) {
        if (rhs < 0) empty = true;
      } else if (a > 0) {
        hi = std::min(hi, floor_div64(rhs, a));
      } else {
        lo = std::max(lo, ceil_div64(rhs, a));
      }
    }
    if (empty) continue;
    for (std::int64_t x = lo; x <= hi; ++x) {
      if (!emit(x, y)) return false;
    }
  }
  return true;
}

}  // namespace

Frame::Frame(std::vector<P64> points) : points_(std::move(points)) {
  if (points_.size() > 64) throw std::invalid_argument("frame holds at most 64 points");
  if (points_.empty()) return;
  std::int64_t xmax = points_[0].x, ymax = points_[0].y;
  xmin_ = points_[0].x;
  ymin_ = points_[0].y;
  for (const auto& p : points_) {
    xmin_ = std::min(xmin_, p.x);
    ymin_ = std::min(ymin_, p.y);
    xmax = std::max(xmax, p.x);
    ymax = std::max(ymax, p.y);
  }
  width_ = xmax - xmin_ + 1;
  height_ = ymax - ymin_ + 1;
  grid_.assign(static_cast<std::size_t>(width_ * height_), -1);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    auto& slot = grid_[static_cast<std::size_t>((points_[i].y - ymin_) * width_ + points_[i].x - xmin_)];
    if (slot != -1) throw std::invalid_argument("duplicate frame point");
    slot = static_cast<int>(i);
  }
}

std::optional<std::size_t> Frame::index_of(const P64& p) const {
  std::int64_t cx = p.x - xmin_, cy = p.y - ymin_;
  if (cx < 0 || cy < 0 || cx >= width_ || cy >= height_) return std::nullopt;
  int idx = grid_[static_cast<std::size_t>(cy * width_ + cx)];
  if (idx < 0) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

Mask Frame::mask_of(const std::vector<P64>& pts) const {
  Mask m = 0;
  for (const auto& p : pts) {
    auto idx = index_of(p);
    if (!idx) throw std::invalid_argument("point outside frame");
    m |= Mask{1} << *idx;
  }
  return m;
}

std::vector<P64> Frame::points_of(Mask mask) const {
  std::vector<P64> out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (mask >> i & 1) out.push_back(points_[i]);
  }
  return out;
}

std::optional<Mask> Frame::close(Mask mask) const {
  if (mask == 0) return Mask{0};
  std::vector<P64> hull = monotone_chain(points_of(mask));
  Mask out = 0;
  bool inside = for_each_point(hull, [&](std::int64_t x, std::int64_t y) {
    auto idx = index_of({x, y});
    if (!idx) return false;
    out |= Mask{1} << *idx;
    return true;
  });
  if (!inside) return std::nullopt;
  return out;
}

LatticePolygon Frame::polygon(Mask mask) const {
  std::vector<LatticePoint> pts;
  for (const auto& p : points_of(mask)) pts.push_back({p.x, p.y});
  return convex_hull(pts);
}

HullStats hull_stats(const std::vector<P64>& pts) {
  std::vector<P64> hull = monotone_chain(pts);
  HullStats s;
  s.dimension = hull.size() >= 3 ? 2 : static_cast<int>(hull.size()) - 1;
  if (s.dimension == 0) {
    s.boundary = 1;
    return s;
  }
  if (s.dimension == 1) {
    s.boundary = gcd64(hull[1].x - hull[0].x, hull[1].y - hull[0].y) + 1;
    return s;
  }
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const P64& a = hull[i];
    const P64& b = hull[(i + 1) % hull.size()];
    s.double_area += a.x * b.y - a.y * b.x;
    s.boundary += gcd64(b.x - a.x, b.y - a.y);
  }
  s.interior = (s.double_area - s.boundary + 2) / 2;
  return s;
}

std::vector<Mask> closed_sets(const Frame& frame, const std::vector<Mask>& seeds,
                              const std::function<bool(Mask)>& keep) {
  std::unordered_set<Mask> seen;
  std::deque<Mask> queue;
  for (Mask s : seeds) {
    if (keep(s) && seen.insert(s).second) queue.push_back(s);
  }
  while (!queue.empty()) {
    Mask s = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < frame.size(); ++i) {
      if (s >> i & 1) continue;
      auto t = frame.close(s | Mask{1} << i);
      if (!t || seen.count(*t)) continue;
      if (!keep(*t)) continue;
      seen.insert(*t);
      queue.push_back(*t);
    }
  }
  std::vector<Mask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t max_pair_gcd(const std::vector<P64>& pts) {
  std::int64_t best = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::max(best, gcd64(pts[j].x - pts[i].x, pts[j].y - pts[i].y));
    }
  }
  return best;
}

}  // namespace panoptigon::detail
