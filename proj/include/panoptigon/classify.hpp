#pragma once

#include <string>
#include <vector>

#include "panoptigon/lattice.hpp"

namespace panoptigon {

struct PanoptigonReport {
  bool is_panoptigon = false;
  PointSet panoptigon_points;
};

/// Every lattice point of P is tried as the viewpoint.
PanoptigonReport is_panoptigon(const LatticePolygon& p);

/// Same test on an arbitrary point configuration.
PanoptigonReport panoptigon_report(const PointSet& points);

/// conv((0,0),(0,1),(a,1),(b,0)); requires 0 <= a <= b, b >= 1.
LatticePolygon trapezoid(const Integer& a, const Integer& b);

/// conv((0,0),(d,0),(0,d)); requires d >= 1.
LatticePolygon standard_triangle(const Integer& d);

/// Closed-form panoptigon test for trapezoids: a <= 2.
bool genus0_panoptigon_predicate(const Integer& a, const Integer& b);

/// Interior polygon empty or of dimension at most one.
bool is_hyperelliptic(const LatticePolygon& p);

enum class HyperellipticKind { Type1, Type2, Type3 };

std::string to_string(HyperellipticKind kind);
HyperellipticKind parse_kind(const std::string& text);

/// Parameters of a lattice-width-2 polygon of genus g >= 2 with its
/// interior points on the line y = 1. k is only meaningful for Type3.
struct HyperellipticForm {
  HyperellipticKind kind = HyperellipticKind::Type1;
  int g = 2;
  int i = 0;
  int j = 0;
  int k = 0;

  friend bool operator==(const HyperellipticForm&, const HyperellipticForm&) = default;
};

bool is_valid(const HyperellipticForm& f);

/// Type1: conv((0,0),(i,0),(2g+1-i,2),(1,2))
/// Type2: conv((0,0),(i,0),(g+1,1),(j+1,2),(1,2))
/// Type3: conv((0,0),(i,0),(g+1,1),(k+j,2),(k,2),(0,1))
/// Throws std::invalid_argument for an invalid form.
LatticePolygon hyperelliptic_polygon(const HyperellipticForm& f);

/// All valid forms of genus g, ordered by (kind, i, j, k).
std::vector<HyperellipticForm> hyperelliptic_forms(int g);

/// The form whose polygon is equivalent to P. Requires lattice width 2,
/// genus >= 2 and P hyperelliptic; throws std::invalid_argument otherwise
/// and std::logic_error if no template matches.
HyperellipticForm hyperelliptic_normal_form(const LatticePolygon& p);

bool hyperelliptic_panoptigon_predicate(const HyperellipticForm& f);

/// (g+3)(2g^2+15g+16)/6; requires g >= 2.
Integer hyperelliptic_count(const Integer& g);

}  // namespace panoptigon
