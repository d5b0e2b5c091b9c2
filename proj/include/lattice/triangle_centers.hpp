#pragma once

/**
 * \file
 * Lattice points, lattice triangles and their exact centers.
 *
 * All centers come back as exact rational points. The circumcenter is
 * evaluated with the base vertex translated to the origin, where for side
 * vectors u = v1 - v3 = x1 + i y1 and w = v2 - v3 = x2 + i y2
 *
 *   F = u w (conj(w) - conj(u)) / (u conj(w) - conj(u) w)
 *
 * with denominator 2i (x2 y1 - x1 y2) and numerator
 * |w|^2 u - |u|^2 w. The orthocenter follows from H = 3G - 2F.
 */

#include <array>
#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "lattice/exact_arith.hpp"

namespace lattice {

struct LatticePoint {
  Integer x;
  Integer y;

  friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend LatticePoint operator*(Integer k, const LatticePoint& p) { return {k * p.x, k * p.y}; }
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// z-component of the planar cross product.
inline Integer cross(const LatticePoint& a, const LatticePoint& b) { return a.x * b.y - a.y * b.x; }
inline Integer dot(const LatticePoint& a, const LatticePoint& b) { return a.x * b.x + a.y * b.y; }
inline int sigma(const LatticePoint& p) { return sigma(p.x, p.y); }

std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

struct RationalPoint {
  Rational x;
  Rational y;

  bool is_lattice() const { return x.is_integer() && y.is_integer(); }
  /// Only meaningful when is_lattice().
  LatticePoint to_lattice() const { return {x.num(), y.num()}; }

  friend RationalPoint operator+(const RationalPoint& a, const RationalPoint& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend RationalPoint operator-(const RationalPoint& a, const RationalPoint& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend RationalPoint operator*(const Rational& k, const RationalPoint& p) {
    return {k * p.x, k * p.y};
  }
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

inline RationalPoint to_rational(const LatticePoint& p) { return {Rational(p.x), Rational(p.y)}; }
Rational squared_distance(const RationalPoint& a, const RationalPoint& b);

std::ostream& operator<<(std::ostream& os, const RationalPoint& p);

class DegenerateTriangleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Three lattice vertices that are not collinear.
class Triangle {
 public:
  /// Throws DegenerateTriangleError for collinear vertices.
  Triangle(LatticePoint v1, LatticePoint v2, LatticePoint v3);

  /// Origin-based triangle O, v1, v2.
  static Triangle at_origin(LatticePoint v1, LatticePoint v2) { return {v1, v2, LatticePoint{}}; }

  const LatticePoint& v1() const { return v_[0]; }
  const LatticePoint& v2() const { return v_[1]; }
  const LatticePoint& v3() const { return v_[2]; }
  const std::array<LatticePoint, 3>& vertices() const { return v_; }

  /// Side vectors based at v3.
  LatticePoint side1() const { return v_[0] - v_[2]; }
  LatticePoint side2() const { return v_[1] - v_[2]; }

  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  std::array<LatticePoint, 3> v_;
};

std::ostream& operator<<(std::ostream& os, const Triangle& t);

/// Canonical a*x + b*y = c with gcd(|a|,|b|,|c|) = 1 and the first nonzero of (a, b) positive.
struct RationalLine {
  Integer a;
  Integer b;
  Integer c;

  bool contains(const RationalPoint& p) const { return Rational(a) * p.x + Rational(b) * p.y == Rational(c); }
  bool contains(const LatticePoint& p) const { return a * p.x + b * p.y == c; }
  friend bool operator==(const RationalLine&, const RationalLine&) = default;
};

/// Line through two distinct points. Throws std::invalid_argument if p == q.
RationalLine line_through(const RationalPoint& p, const RationalPoint& q);

RationalPoint centroid(const Triangle& t);
RationalPoint circumcenter(const Triangle& t);
RationalPoint orthocenter(const Triangle& t);

/// |cross(v1 - v3, v2 - v3)|, twice the area; always positive.
Integer area_twice(const Triangle& t);
Rational circumradius_squared(const Triangle& t);

class EulerLineUndefined : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Throws EulerLineUndefined when circumcenter and centroid coincide.
RationalLine euler_line(const Triangle& t);

/// A lattice point on the Euler line, or nullopt if the line carries none.
/// The point chosen has minimal |x|, then minimal |y|, then x >= 0.
std::optional<LatticePoint> euler_line_lattice_point(const Triangle& t);

/// Same selection rule, for any canonical line.
std::optional<LatticePoint> lattice_point_on(const RationalLine& line);

/// The 8 symmetries of the square lattice, indexed 0..7:
/// bit 0 swaps x and y, bit 1 negates x, bit 2 negates y (applied in that order).
LatticePoint apply_symmetry(int g, const LatticePoint& p);
Triangle apply_symmetry(int g, const Triangle& t);

}  // namespace lattice
