#include "lattice/triangle_centers.hpp"

#include <tuple>
#include <utility>

namespace lattice {

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

std::ostream& operator<<(std::ostream& os, const RationalPoint& p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

std::ostream& operator<<(std::ostream& os, const Triangle& t) {
  return os << t.v1() << ',' << t.v2() << ',' << t.v3();
}

Rational squared_distance(const RationalPoint& a, const RationalPoint& b) {
  Rational dx = a.x - b.x;
  Rational dy = a.y - b.y;
  return dx * dx + dy * dy;
}

Triangle::Triangle(LatticePoint v1, LatticePoint v2, LatticePoint v3) : v_{v1, v2, v3} {
  if (cross(v1 - v3, v2 - v3).is_zero()) {
    throw DegenerateTriangleError("degenerate triangle: vertices are collinear");
  }
}

RationalPoint centroid(const Triangle& t) {
  const Rational third(1, 3);
  return {third * Rational(t.v1().x + t.v2().x + t.v3().x),
          third * Rational(t.v1().y + t.v2().y + t.v3().y)};
}

RationalPoint circumcenter(const Triangle& t) {
  const LatticePoint u = t.side1();
  const LatticePoint w = t.side2();
  const Integer uu = dot(u, u);
  const Integer ww = dot(w, w);
  // Numerator |w|^2 u - |u|^2 w = (a, b); denominator 2i d.
  const Integer a = ww * u.x - uu * w.x;
  const Integer b = ww * u.y - uu * w.y;
  const Integer d = w.x * u.y - u.x * w.y;
  // (a + ib) / (2i d) = (b - ia) / (2d)
  const Integer twice_d = Integer(2) * d;
  return {Rational(b, twice_d) + Rational(t.v3().x), Rational(-a, twice_d) + Rational(t.v3().y)};
}

RationalPoint orthocenter(const Triangle& t) {
  const LatticePoint sum = t.v1() + t.v2() + t.v3();
  return to_rational(sum) - Rational(2) * circumcenter(t);
}

Integer area_twice(const Triangle& t) { return abs(cross(t.side1(), t.side2())); }

Rational circumradius_squared(const Triangle& t) {
  return squared_distance(circumcenter(t), to_rational(t.v3()));
}

RationalLine line_through(const RationalPoint& p, const RationalPoint& q) {
  if (p == q) throw std::invalid_argument("line_through: points coincide");
  const Rational a = q.y - p.y;
  const Rational b = p.x - q.x;
  const Rational c = a * p.x + b * p.y;
  auto lcm = [](Integer m, Integer n) { return m / gcd(m, n) * n; };
  const Integer scale = lcm(lcm(a.den(), b.den()), c.den());
  Integer ia = a.num() * (scale / a.den());
  Integer ib = b.num() * (scale / b.den());
  Integer ic = c.num() * (scale / c.den());
  const Integer g = gcd_many({ia, ib, ic});
  ia /= g;
  ib /= g;
  ic /= g;
  const int lead = ia.is_zero() ? ib.sign() : ia.sign();
  if (lead < 0) return {-ia, -ib, -ic};
  return {ia, ib, ic};
}

RationalLine euler_line(const Triangle& t) {
  const RationalPoint f = circumcenter(t);
  const RationalPoint g = centroid(t);
  if (f == g) throw EulerLineUndefined("Euler line undefined: circumcenter equals centroid");
  return line_through(f, g);
}

std::optional<LatticePoint> lattice_point_on(const RationalLine& line) {
  const Integer g = gcd(line.a, line.b);
  if (!(line.c % g).is_zero()) return std::nullopt;
  if (line.b.is_zero()) return LatticePoint{line.c / line.a, Integer(0)};

  const ExtendedGcd eg = extended_gcd(line.a, line.b);
  const Integer x0 = eg.x * (line.c / g);
  const Integer period = abs(line.b / g);
  const Integer r = floor_mod(x0, period);

  auto point_at = [&](Integer x) { return LatticePoint{x, (line.c - line.a * x) / line.b}; };
  auto key = [](const LatticePoint& p) { return std::make_tuple(abs(p.x), abs(p.y), p.x.sign() < 0); };

  LatticePoint best = point_at(r);
  if (!r.is_zero()) {
    LatticePoint other = point_at(r - period);
    if (key(other) < key(best)) best = other;
  }
  return best;
}

std::optional<LatticePoint> euler_line_lattice_point(const Triangle& t) {
  return lattice_point_on(euler_line(t));
}

LatticePoint apply_symmetry(int g, const LatticePoint& p) {
  LatticePoint q = (g & 1) ? LatticePoint{p.y, p.x} : p;
  if (g & 2) q.x = -q.x;
  if (g & 4) q.y = -q.y;
  return q;
}

Triangle apply_symmetry(int g, const Triangle& t) {
  return {apply_symmetry(g, t.v1()), apply_symmetry(g, t.v2()), apply_symmetry(g, t.v3())};
}

}  // namespace lattice
