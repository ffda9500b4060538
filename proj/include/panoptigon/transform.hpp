#pragma once

#include <vector>

#include "panoptigon/lattice.hpp"

namespace panoptigon {

struct Matrix2 {
  Integer a, b;
  Integer c, d;

  Integer det() const { return a * d - b * c; }
  LatticePoint operator*(const LatticePoint& p) const {
    return {a * p.x + b * p.y, c * p.x + d * p.y};
  }
  Matrix2 operator*(const Matrix2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// p -> A p + t with det A = +-1.
class UnimodularMap {
 public:
  /// Throws std::invalid_argument unless det(matrix) is 1 or -1.
  UnimodularMap(Matrix2 matrix, LatticePoint translation);

  static UnimodularMap identity();
  static UnimodularMap translation_by(const LatticePoint& t);

  const Matrix2& matrix() const { return matrix_; }
  const LatticePoint& translation() const { return translation_; }

  LatticePoint operator()(const LatticePoint& p) const { return matrix_ * p + translation_; }

  /// (*this)(other(p)).
  UnimodularMap after(const UnimodularMap& other) const;
  UnimodularMap inverse() const;

  friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;

 private:
  Matrix2 matrix_;
  LatticePoint translation_;
};

LatticePolygon apply(const UnimodularMap& t, const LatticePolygon& p);

/// Primitive linear functional (x, y) -> alpha*x + beta*y, sign-normalized
/// so that alpha > 0, or alpha == 0 and beta > 0.
class Functional {
 public:
  /// Throws std::invalid_argument for (0, 0) or a non-primitive pair.
  Functional(Integer alpha, Integer beta);

  /// Divides out the gcd and fixes the sign. Throws for (0, 0).
  static Functional normalized(const Integer& alpha, const Integer& beta);

  const Integer& alpha() const { return alpha_; }
  const Integer& beta() const { return beta_; }
  Integer operator()(const LatticePoint& p) const { return alpha_ * p.x + beta_ * p.y; }

  friend bool operator==(const Functional&, const Functional&) = default;
  friend std::strong_ordering operator<=>(const Functional& a, const Functional& b);

 private:
  Integer alpha_;
  Integer beta_;
};

Integer width_wrt(const LatticePolygon& p, const Functional& f);

struct WidthResult {
  Integer width;
  std::vector<Functional> directions;  // sorted
};

/// Minimum width over primitive functionals, with every minimizer found in
/// the box |alpha|, |beta| <= min(width along x, width along y).
WidthResult lattice_width(const LatticePolygon& p);

struct DiameterResult {
  Integer length;
  // Primitive slope vectors (dx, dy) of longest segments, normalized like
  // functionals. Empty for a single point.
  std::vector<Functional> directions;
};

DiameterResult lattice_diameter(const LatticePolygon& p);

struct CanonicalResult {
  LatticePolygon polygon;
  UnimodularMap map;  // map(P) == polygon
};

/// Lexicographically least normalized image over all edge placements.
/// Throws std::invalid_argument("canonical form requires dimension 2").
CanonicalResult canonical_map(const LatticePolygon& p);
LatticePolygon canonical_form(const LatticePolygon& p);

bool are_equivalent(const LatticePolygon& p, const LatticePolygon& q);

/// A map t with t(from) == to, if the polygons are equivalent.
std::optional<UnimodularMap> equivalence(const LatticePolygon& from, const LatticePolygon& to);

}  // namespace panoptigon
