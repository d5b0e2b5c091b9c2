#include <doctest.h>

#include <random>

#include "lattice/triangle_centers.hpp"
#include "oracle.hpp"
#include "properties.hpp"

using namespace lattice;

namespace {

RationalPoint rp(Rational x, Rational y) { return {x, y}; }
Triangle tri(std::int64_t x1, std::int64_t y1, std::int64_t x2, std::int64_t y2) {
  return Triangle::at_origin({x1, y1}, {x2, y2});
}

}  // namespace

TEST_CASE("degenerate triangles are rejected at construction") {
  CHECK_THROWS_AS(Triangle({0, 0}, {1, 1}, {2, 2}), DegenerateTriangleError);
  CHECK_THROWS_AS(Triangle({3, 4}, {3, 4}, {0, 1}), DegenerateTriangleError);
  CHECK_NOTHROW(Triangle({0, 0}, {1, 0}, {0, 1}));
}

TEST_CASE("centroid") {
  CHECK(centroid(tri(2, 0, 2, 3)) == rp(Rational(4, 3), 1));
  CHECK(centroid(tri(4, 2, 1, 5)) == rp(Rational(5, 3), Rational(7, 3)));
  CHECK(centroid(tri(3, 0, 0, 3)) == rp(1, 1));
}

TEST_CASE("circumcenter") {
  CHECK(circumcenter(tri(2, 0, 2, 3)) == rp(1, Rational(3, 2)));
  CHECK(circumcenter(tri(4, 2, 1, 5)) == rp(Rational(4, 3), Rational(7, 3)));
  CHECK(circumcenter(tri(19, 17, 11, 23)) == rp(Rational(39, 5), Rational(52, 5)));
  CHECK(circumcenter(tri(6, 0, 8, 4)) == rp(3, 4));
}

TEST_CASE("orthocenter") {
  CHECK(orthocenter(tri(2, 0, 2, 3)) == rp(2, 0));
  CHECK(orthocenter(tri(19, 17, 11, 23)) == rp(Rational(72, 5), Rational(96, 5)));
  CHECK(orthocenter(tri(6, 0, 8, 4)) == rp(8, -4));
}

TEST_CASE("area_twice") {
  CHECK(area_twice(tri(19, 17, 11, 23)) == 250);
  CHECK(area_twice(tri(6, 0, 8, 4)) == 24);
  for (std::int64_t n = 1; n <= 20; ++n) CHECK(area_twice(tri(2, 0, n, n)) == 2 * n);
  // Orientation does not matter.
  CHECK(area_twice(tri(8, 4, 6, 0)) == 24);
}

TEST_CASE("circumradius_squared") {
  CHECK(circumradius_squared(tri(19, 17, 11, 23)) == Rational(169));
  CHECK(circumradius_squared(tri(6, 0, 8, 4)) == Rational(25));
  CHECK(circumradius_squared(tri(12, 0, 12, 18)) == Rational(117));
  CHECK(circumradius_squared(tri(2, 0, 2, 3)) == Rational(13, 4));
}

TEST_CASE("euler_line") {
  CHECK(euler_line(tri(4, 2, 1, 5)) == RationalLine{0, 3, 7});
  CHECK(euler_line(tri(2, 0, 2, 3)) == RationalLine{3, 2, 6});
  CHECK(euler_line(tri(6, 0, 8, 4)) == RationalLine{8, 5, 44});

  for (const Triangle& t : {tri(4, 2, 1, 5), tri(2, 0, 2, 3), tri(6, 0, 8, 4), tri(19, 17, 11, 23)}) {
    const RationalLine l = euler_line(t);
    CHECK(l.contains(circumcenter(t)));
    CHECK(l.contains(centroid(t)));
    CHECK(l.contains(orthocenter(t)));
  }
}

TEST_CASE("euler_line_lattice_point") {
  CHECK_FALSE(euler_line_lattice_point(tri(4, 2, 1, 5)).has_value());

  auto p = euler_line_lattice_point(tri(2, 0, 2, 3));
  REQUIRE(p.has_value());
  CHECK(RationalLine{3, 2, 6}.contains(*p));
  CHECK(*p == LatticePoint{0, 3});  // minimal |x|

  p = euler_line_lattice_point(tri(6, 0, 8, 4));
  REQUIRE(p.has_value());
  CHECK(RationalLine{8, 5, 44}.contains(*p));
}

TEST_CASE("lattice_point_on picks minimal |x| then |y|") {
  // Brute-force oracle over a window.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> d(-9, 9);
  for (int i = 0; i < 400; ++i) {
    Integer a = d(rng), b = d(rng), c = d(rng) * 3;
    if (a.is_zero() && b.is_zero()) continue;
    const Integer g = gcd_many({a, b, c});
    RationalLine l{a / g, b / g, c / g};
    if (l.a.sign() < 0 || (l.a.is_zero() && l.b.sign() < 0)) l = {-l.a, -l.b, -l.c};
    std::optional<LatticePoint> best;
    auto key = [](const LatticePoint& p) { return std::make_tuple(abs(p.x), abs(p.y), p.x.sign() < 0); };
    for (std::int64_t x = -200; x <= 200; ++x) {
      std::optional<LatticePoint> q;
      if (l.b.is_zero()) {
        if (l.contains(LatticePoint{x, 0})) q = LatticePoint{x, 0};
      } else if (((l.c - l.a * Integer(x)) % l.b).is_zero()) {
        q = LatticePoint{x, (l.c - l.a * Integer(x)) / l.b};
      }
      if (q && (!best || key(*q) < key(*best))) best = q;
    }
    auto got = lattice_point_on(l);
    CHECK(got.has_value() == best.has_value());
    if (got && best) CHECK(*got == *best);
  }
}

TEST_CASE("centers agree with the bisector and altitude oracle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5000; ++i) {
    const Triangle t = props::random_triangle(rng, i % 3 == 0 ? 1000 : 15);
    const auto p1 = oracle::to_pt(t.v1()), p2 = oracle::to_pt(t.v2()), p3 = oracle::to_pt(t.v3());
    CHECK(oracle::same(oracle::circumcenter(p1, p2, p3), circumcenter(t)));
    CHECK(oracle::same(oracle::orthocenter(p1, p2, p3), orthocenter(t)));
    CHECK(oracle::same(oracle::centroid(p1, p2, p3), centroid(t)));
    CHECK(oracle::same(oracle::squared_distance(oracle::circumcenter(p1, p2, p3), p2), circumradius_squared(t)));
  }
}

TEST_CASE("equidistance and 3G = 2F + H") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 3000; ++i) {
    const Triangle t = props::random_triangle(rng, 40);
    const RationalPoint f = circumcenter(t);
    const Rational r2 = squared_distance(f, to_rational(t.v1()));
    CHECK(squared_distance(f, to_rational(t.v2())) == r2);
    CHECK(squared_distance(f, to_rational(t.v3())) == r2);
    CHECK(Rational(3) * centroid(t) == Rational(2) * f + orthocenter(t));
  }
}

TEST_CASE("translation, relabeling and lattice symmetries act equivariantly") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::int64_t> shift(-500, 500);
  for (int i = 0; i < 2000; ++i) {
    const Triangle t = props::random_triangle(rng, 25);
    const LatticePoint w{shift(rng), shift(rng)};
    const auto& v = t.vertices();
    const Triangle moved(v[0] + w, v[1] + w, v[2] + w);
    const RationalPoint rw = to_rational(w);
    CHECK(circumcenter(moved) == circumcenter(t) + rw);
    CHECK(centroid(moved) == centroid(t) + rw);
    CHECK(orthocenter(moved) == orthocenter(t) + rw);
    CHECK(area_twice(moved) == area_twice(t));
    CHECK(circumradius_squared(moved) == circumradius_squared(t));

    const Triangle relabeled(v[2], v[0], v[1]);
    CHECK(circumcenter(relabeled) == circumcenter(t));
    CHECK(centroid(relabeled) == centroid(t));
    CHECK(orthocenter(relabeled) == orthocenter(t));
    CHECK(area_twice(relabeled) == area_twice(t));
    CHECK(circumradius_squared(relabeled) == circumradius_squared(t));

    const int g = static_cast<int>(rng() % 8);
    const Triangle mapped = apply_symmetry(g, t);
    // Symmetries are linear, so they act on rational points coordinatewise.
    auto map_point = [g](const RationalPoint& p) {
      RationalPoint q = (g & 1) ? RationalPoint{p.y, p.x} : p;
      if (g & 2) q.x = -q.x;
      if (g & 4) q.y = -q.y;
      return q;
    };
    CHECK(circumcenter(mapped) == map_point(circumcenter(t)));
    CHECK(orthocenter(mapped) == map_point(orthocenter(t)));
    CHECK(area_twice(mapped) == area_twice(t));
    CHECK(circumradius_squared(mapped) == circumradius_squared(t));
  }
}
