#include "panoptigon/classify.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "panoptigon/transform.hpp"

namespace panoptigon {

PanoptigonReport panoptigon_report(const PointSet& points) {
  PanoptigonReport out;
  for (const auto& p : points) {
    bool sees_all = true;
    for (const auto& q : points) {
      if (!is_visible(p, q)) {
        sees_all = false;
        break;
      }
    }
    if (sees_all) out.panoptigon_points.push_back(p);
  }
  out.is_panoptigon = !out.panoptigon_points.empty();
  return out;
}

PanoptigonReport is_panoptigon(const LatticePolygon& p) {
  return panoptigon_report(lattice_points(p));
}

LatticePolygon trapezoid(const Integer& a, const Integer& b) {
  if (a < 0 || a > b || b < 1) throw std::invalid_argument("trapezoid requires 0 <= a <= b, b >= 1");
  return convex_hull({{0, 0}, {0, 1}, {a, 1}, {b, 0}});
}

LatticePolygon standard_triangle(const Integer& d) {
  if (d < 1) throw std::invalid_argument("standard triangle requires d >= 1");
  return convex_hull({{0, 0}, {d, 0}, {0, d}});
}

bool genus0_panoptigon_predicate(const Integer& a, const Integer& b) {
  if (a < 0 || a > b || b < 1) throw std::invalid_argument("trapezoid requires 0 <= a <= b, b >= 1");
  return a <= 2;
}

bool is_hyperelliptic(const LatticePolygon& p) {
  auto inner = interior_polygon(p);
  return !inner || inner->dimension() <= 1;
}

std::string to_string(HyperellipticKind kind) {
  switch (kind) {
    case HyperellipticKind::Type1:
      return "Type1";
    case HyperellipticKind::Type2:
      return "Type2";
    case HyperellipticKind::Type3:
      return "Type3";
  }
  return "";
}

HyperellipticKind parse_kind(const std::string& text) {
  if (text == "Type1") return HyperellipticKind::Type1;
  if (text == "Type2") return HyperellipticKind::Type2;
  if (text == "Type3") return HyperellipticKind::Type3;
  throw std::invalid_argument("unknown hyperelliptic kind: " + text);
}

bool is_valid(const HyperellipticForm& f) {
  const int g = f.g, i = f.i, j = f.j, k = f.k;
  if (g < 2) return false;
  switch (f.kind) {
    case HyperellipticKind::Type1:
      return g <= i && i <= 2 * g && j == 0 && k == 0;
    case HyperellipticKind::Type2:
      if (k != 0) return false;
      if (0 <= i && i <= g) return 0 <= j && j <= i;
      if (g < i && i <= 2 * g + 1) return 0 <= j && j <= 2 * g - i + 1;
      return false;
    case HyperellipticKind::Type3:
      if (k < 0 || k > g + 1) return false;
      if (0 <= i && i <= g + 1 - k) return 0 <= j && j <= i;
      if (g + 1 - k < i && i <= 2 * g + 2 - 2 * k) return 0 <= j && j <= 2 * g - i - 2 * k + 2;
      return false;
  }
  return false;
}

LatticePolygon hyperelliptic_polygon(const HyperellipticForm& f) {
  if (!is_valid(f)) throw std::invalid_argument("invalid hyperelliptic form");
  const int g = f.g, i = f.i, j = f.j, k = f.k;
  switch (f.kind) {
    case HyperellipticKind::Type1:
      return convex_hull({{0, 0}, {i, 0}, {2 * g + 1 - i, 2}, {1, 2}});
    case HyperellipticKind::Type2:
      return convex_hull({{0, 0}, {i, 0}, {g + 1, 1}, {j + 1, 2}, {1, 2}});
    case HyperellipticKind::Type3:
      return convex_hull({{0, 0}, {i, 0}, {g + 1, 1}, {k + j, 2}, {k, 2}, {0, 1}});
  }
  throw std::logic_error("unreachable");
}

std::vector<HyperellipticForm> hyperelliptic_forms(int g) {
  std::vector<HyperellipticForm> out;
  for (auto kind : {HyperellipticKind::Type1, HyperellipticKind::Type2, HyperellipticKind::Type3}) {
    const int kmax = kind == HyperellipticKind::Type3 ? g + 1 : 0;
    for (int i = 0; i <= 2 * g + 2; ++i) {
      for (int j = 0; j <= 2 * g + 2; ++j) {
        for (int k = 0; k <= kmax; ++k) {
          HyperellipticForm f{kind, g, i, j, k};
          if (is_valid(f)) out.push_back(f);
        }
      }
    }
  }
  return out;
}

namespace {

struct TemplateTable {
  std::mutex mutex;
  std::map<int, std::vector<std::pair<LatticePolygon, HyperellipticForm>>> by_genus;
};

const std::vector<std::pair<LatticePolygon, HyperellipticForm>>& templates(int g) {
  static TemplateTable table;
  std::lock_guard lock(table.mutex);
  auto it = table.by_genus.find(g);
  if (it != table.by_genus.end()) return it->second;
  std::vector<std::pair<LatticePolygon, HyperellipticForm>> entries;
  for (const auto& f : hyperelliptic_forms(g)) {
    entries.emplace_back(canonical_form(hyperelliptic_polygon(f)), f);
  }
  return table.by_genus.emplace(g, std::move(entries)).first->second;
}

}  // namespace

HyperellipticForm hyperelliptic_normal_form(const LatticePolygon& p) {
  if (p.dimension() != 2 || !is_hyperelliptic(p)) {
    throw std::invalid_argument("normal form requires a hyperelliptic polygon");
  }
  Integer g = genus(p);
  if (g < 2) throw std::invalid_argument("normal form requires genus >= 2");
  if (lattice_width(p).width != 2) throw std::invalid_argument("normal form requires lattice width 2");
  LatticePolygon canon = canonical_form(p);
  for (const auto& [poly, form] : templates(static_cast<int>(g))) {
    if (poly == canon) return form;
  }
  throw std::logic_error("no hyperelliptic template matches");
}

bool hyperelliptic_panoptigon_predicate(const HyperellipticForm& f) {
  if (!is_valid(f)) throw std::invalid_argument("invalid hyperelliptic form");
  const int g = f.g, i = f.i, j = f.j, k = f.k;
  switch (f.kind) {
    case HyperellipticKind::Type1:
      return g <= 3;
    case HyperellipticKind::Type2:
      return g <= 2 || (j == 0 && i <= 1);
    case HyperellipticKind::Type3: {
      auto parity_ok = [k](int t) {
        if (t == 0) return k % 2 == 1;
        if (t == 2) return k % 2 == 0;
        return true;
      };
      return (j == 0 && i <= 2 && parity_ok(i)) || (i == 0 && j <= 2 && parity_ok(j));
    }
  }
  return false;
}

Integer hyperelliptic_count(const Integer& g) {
  if (g < 2) throw std::invalid_argument("hyperelliptic count requires g >= 2");
  return (g + 3) * (2 * g * g + 15 * g + 16) / 6;
}

}  // namespace panoptigon
