#include "panoptigon/transform.hpp"

#include <algorithm>
#include <stdexcept>

namespace panoptigon {

UnimodularMap::UnimodularMap(Matrix2 matrix, LatticePoint translation)
    : matrix_(std::move(matrix)), translation_(std::move(translation)) {
  Integer det = matrix_.det();
  if (det != 1 && det != -1) throw std::invalid_argument("matrix is not unimodular");
}

UnimodularMap UnimodularMap::identity() { return {{1, 0, 0, 1}, {0, 0}}; }

UnimodularMap UnimodularMap::translation_by(const LatticePoint& t) { return {{1, 0, 0, 1}, t}; }

UnimodularMap UnimodularMap::after(const UnimodularMap& other) const {
  return {matrix_ * other.matrix_, matrix_ * other.translation_ + translation_};
}

UnimodularMap UnimodularMap::inverse() const {
  const Integer det = matrix_.det();
  Matrix2 inv{matrix_.d * det, -matrix_.b * det, -matrix_.c * det, matrix_.a * det};
  LatticePoint t = inv * translation_;
  return {inv, {-t.x, -t.y}};
}

LatticePolygon apply(const UnimodularMap& t, const LatticePolygon& p) {
  std::vector<LatticePoint> image;
  image.reserve(p.size());
  for (const auto& v : p.vertices()) image.push_back(t(v));
  return convex_hull(image);
}

Functional::Functional(Integer alpha, Integer beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_ == 0 && beta_ == 0) throw std::invalid_argument("zero functional");
  if (gcd(alpha_, beta_) != 1) throw std::invalid_argument("functional is not primitive");
  if (alpha_ < 0 || (alpha_ == 0 && beta_ < 0)) {
    alpha_ = -alpha_;
    beta_ = -beta_;
  }
}

Functional Functional::normalized(const Integer& alpha, const Integer& beta) {
  Integer g = gcd(alpha, beta);
  if (g == 0) throw std::invalid_argument("zero functional");
  return Functional(alpha / g, beta / g);
}

std::strong_ordering operator<=>(const Functional& a, const Functional& b) {
  if (auto c = compare(a.alpha_, b.alpha_); c != 0) return c;
  return compare(a.beta_, b.beta_);
}

Integer width_wrt(const LatticePolygon& p, const Functional& f) {
  const auto& v = p.vertices();
  Integer lo = f(v[0]);
  Integer hi = lo;
  for (std::size_t i = 1; i < v.size(); ++i) {
    Integer val = f(v[i]);
    if (val < lo) lo = val;
    if (val > hi) hi = val;
  }
  return hi - lo;
}

WidthResult lattice_width(const LatticePolygon& p) {
  const auto& v = p.vertices();
  if (p.dimension() == 1) {
    LatticePoint d = v[1] - v[0];
    return {0, {Functional::normalized(d.y, -d.x)}};
  }
  Integer bound = std::min(width_wrt(p, Functional(1, 0)), width_wrt(p, Functional(0, 1)));
  WidthResult best{bound + 1, {}};
  auto consider = [&best, &p](const Functional& f) {
    Integer w = width_wrt(p, f);
    if (w < best.width) {
      best.width = w;
      best.directions.clear();
    }
    if (w == best.width) best.directions.push_back(f);
  };
  if (p.dimension() == 0) {
    for (Integer a = 0; a <= 1; ++a) {
      for (Integer b = -1; b <= 1; ++b) {
        if (a != 0 || b > 0) consider(Functional(a, b));
      }
    }
    return best;
  }
  // Every minimizer has |f(u)|, |f(t)| <= bound.
  LatticePoint u = v[1] - v[0], t = v[2] - v[0];
  Integer det = u.x * t.y - u.y * t.x;
  for (Integer s = -bound; s <= bound; ++s) {
    for (Integer r = -bound; r <= bound; ++r) {
      Integer a = s * t.y - r * u.y, b = r * u.x - s * t.x;
      if (a % det != 0 || b % det != 0) continue;
      a /= det;
      b /= det;
      if (a < 0 || (a == 0 && b <= 0)) continue;
      if (gcd(a, b) != 1) continue;
      consider(Functional(a, b));
    }
  }
  std::sort(best.directions.begin(), best.directions.end());
  best.directions.erase(std::unique(best.directions.begin(), best.directions.end()), best.directions.end());
  return best;
}

DiameterResult lattice_diameter(const LatticePolygon& p) {
  PointSet pts = lattice_points(p);
  DiameterResult best{0, {}};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Integer dx = pts[j].x - pts[i].x;
      Integer dy = pts[j].y - pts[i].y;
      Integer g = gcd(dx, dy);
      if (g < best.length) continue;
      if (g > best.length) {
        best.length = g;
        best.directions.clear();
      }
      best.directions.push_back(Functional(dx / g, dy / g));
    }
  }
  std::sort(best.directions.begin(), best.directions.end());
  best.directions.erase(std::unique(best.directions.begin(), best.directions.end()),
                        best.directions.end());
  return best;
}

CanonicalResult canonical_map(const LatticePolygon& p) {
  if (p.dimension() != 2) throw std::invalid_argument("canonical form requires dimension 2");
  const auto& v = p.vertices();
  const std::size_t n = v.size();
  std::optional<CanonicalResult> best;
  for (std::size_t idx = 0; idx < n; ++idx) {
    for (int dir : {1, -1}) {
      const LatticePoint& from = v[idx];
      const LatticePoint& to = v[(idx + n + dir) % n];
      Integer g = gcd(to.x - from.x, to.y - from.y);
      Integer ex = (to.x - from.x) / g;
      Integer ey = (to.y - from.y) / g;
      Bezout bz = extended_gcd(ex, ey);
      // Sends e to (1, 0) and the polygon into the upper half-plane.
      Matrix2 m = dir == 1 ? Matrix2{bz.p, bz.q, -ey, ex} : Matrix2{bz.p, bz.q, ey, -ex};
      UnimodularMap place(m, LatticePoint{0, 0} - m * from);
      LatticePolygon image = apply(place, p);
      const LatticePoint& u = image.vertices()[2];
      Integer s = -floor_div(u.x, u.y);
      UnimodularMap shear({1, s, 0, 1}, {0, 0});
      UnimodularMap total = shear.after(place);
      LatticePolygon cand = apply(total, p);
      if (!best || cand < best->polygon) best = CanonicalResult{std::move(cand), std::move(total)};
    }
  }
  return std::move(*best);
}

LatticePolygon canonical_form(const LatticePolygon& p) { return canonical_map(p).polygon; }

bool are_equivalent(const LatticePolygon& p, const LatticePolygon& q) {
  return canonical_form(p) == canonical_form(q);
}

std::optional<UnimodularMap> equivalence(const LatticePolygon& from, const LatticePolygon& to) {
  CanonicalResult a = canonical_map(from);
  CanonicalResult b = canonical_map(to);
  if (a.polygon != b.polygon) return std::nullopt;
  return b.map.inverse().after(a.map);
}

}  // namespace panoptigon
