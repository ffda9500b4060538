#include "panoptigon/relaxation.hpp"

#include <stdexcept>

#include "panoptigon/detail/hull.hpp"

namespace panoptigon {

std::vector<HalfPlane> edge_halfplanes(const LatticePolygon& q) {
  if (q.dimension() != 2) throw std::invalid_argument("relaxation requires dimension 2");
  const auto& v = q.vertices();
  std::vector<HalfPlane> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const LatticePoint& p = v[i];
    const LatticePoint& w = v[(i + 1) % v.size()];
    Integer g = gcd(w.x - p.x, w.y - p.y);
    Integer a = (w.y - p.y) / g;
    Integer b = (p.x - w.x) / g;
    Integer c = a * p.x + b * p.y;
    out.push_back({a, b, c});
  }
  return out;
}

namespace {

bool satisfies(const HalfPlane& h, const RationalPoint& p) {
  Rational lhs = Rational(h.a) * p.x + Rational(h.b) * p.y;
  return lhs <= Rational(h.c);
}

bool on_line(const HalfPlane& h, const RationalPoint& p) {
  Rational lhs = Rational(h.a) * p.x + Rational(h.b) * p.y;
  return lhs == Rational(h.c);
}

}  // namespace

Relaxation relax(const LatticePolygon& q) {
  std::vector<HalfPlane> hs = edge_halfplanes(q);
  for (auto& h : hs) h.c += 1;

  std::vector<RationalPoint> corners;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      const HalfPlane& h = hs[i];
      const HalfPlane& k = hs[j];
      Integer det = h.a * k.b - k.a * h.b;
      if (det == 0) continue;
      Integer xn = h.c * k.b - k.c * h.b;
      Integer yn = h.a * k.c - k.a * h.c;
      RationalPoint pt{Rational(xn) / det, Rational(yn) / det};
      bool inside = true;
      for (const auto& other : hs) {
        if (!satisfies(other, pt)) {
          inside = false;
          break;
        }
      }
      if (inside) corners.push_back(std::move(pt));
    }
  }

  Relaxation out;
  out.polygon.vertices = detail::monotone_chain(std::move(corners));
  out.polygon.is_lattice = true;
  for (const auto& p : out.polygon.vertices) {
    if (!p.integral()) out.polygon.is_lattice = false;
  }
  for (std::size_t i = 0; i < hs.size(); ++i) {
    int hits = 0;
    for (const auto& p : out.polygon.vertices) hits += on_line(hs[i], p);
    if (hits < 2) out.collapsed_edges.push_back(i);
  }
  return out;
}

std::variant<LatticePolygon, NotLattice> relaxed_lattice(const LatticePolygon& q) {
  RationalPolygon r = relax(q).polygon;
  std::vector<LatticePoint> pts;
  for (const auto& p : r.vertices) {
    if (!p.integral()) return NotLattice{p};
    pts.push_back({numerator(p.x), numerator(p.y)});
  }
  return convex_hull(pts);
}

bool is_maximal(const LatticePolygon& p, int margin_scale) {
  auto inner = interior_polygon(p);
  if (!inner) throw std::invalid_argument("maximality undefined without interior points");
  if (inner->dimension() == 2) {
    auto r = relaxed_lattice(*inner);
    const auto* lattice = std::get_if<LatticePolygon>(&r);
    return lattice && *lattice == p;
  }
  return is_maximal_by_extension(p, margin_scale);
}

bool is_maximal_by_extension(const LatticePolygon& p, int margin_scale) {
  if (p.dimension() < 2 || genus(p) == 0) {
    throw std::invalid_argument("maximality undefined without interior points");
  }
  // Containment keeps the old interior points interior, so equal interiors
  // is the same as equal genus.
  const Integer g = genus(p);
  BoundingBox box = bounding_box(p);
  Integer margin = std::max(box.xmax - box.xmin, box.ymax - box.ymin) * margin_scale;
  std::vector<LatticePoint> pts = p.vertices();
  pts.emplace_back();
  for (Integer x = box.xmin - margin; x <= box.xmax + margin; ++x) {
    for (Integer y = box.ymin - margin; y <= box.ymax + margin; ++y) {
      LatticePoint c{x, y};
      if (contains(p, c)) continue;
      pts.back() = c;
      LatticePolygon ext = convex_hull(pts);
      if (lattice_point_count(ext) - boundary_count(ext) == g) return false;
    }
  }
  return true;
}

}  // namespace panoptigon
