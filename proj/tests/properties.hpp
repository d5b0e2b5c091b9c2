#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// runner. Each returns an empty string on success or a description of the
// first failing case.

#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include "lattice/conditions.hpp"
#include "lattice/exact_arith.hpp"
#include "lattice/triangle_centers.hpp"

namespace props {

using namespace lattice;

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-1'000'000, 1'000'000);
  std::uniform_int_distribution<std::int64_t> den(1, 1'000'000);
  std::int64_t d = den(rng);
  if (rng() & 1) d = -d;
  return Rational(num(rng), d);
}

inline bool canonical(const Rational& r) {
  return r.den().sign() > 0 && gcd(r.num(), r.den()) == Integer(1);
}

inline std::string rational_field_laws(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    std::ostringstream where;
    where << "a=" << a << " b=" << b << " c=" << c;
    for (const Rational& r : {a, b, c, a + b, a * b, a - b, (a + b) * c}) {
      if (!canonical(r)) return "non-canonical result " + r.to_string() + " for " + where.str();
    }
    if (!(a + b == b + a)) return "add not commutative: " + where.str();
    if (!(a * b == b * a)) return "mul not commutative: " + where.str();
    if (!((a + b) + c == a + (b + c))) return "add not associative: " + where.str();
    if (!((a * b) * c == a * (b * c))) return "mul not associative: " + where.str();
    if (!(a * (b + c) == a * b + a * c)) return "not distributive: " + where.str();
    if (!((a - b) + b == a)) return "sub does not invert add: " + where.str();
    if (!(a + (-a) == Rational(0))) return "no additive inverse: " + where.str();
    if (!a.is_zero() && !(a * (Rational(1) / a) == Rational(1))) return "no multiplicative inverse: " + where.str();
    if (!b.is_zero() && !((a / b) * b == a)) return "div does not invert mul: " + where.str();
    if ((a < b) == (b < a) && !(a == b)) return "ordering not total: " + where.str();
  }
  return {};
}

inline std::int64_t big_coord(std::mt19937_64& rng) {
  return std::uniform_int_distribution<std::int64_t>(-1'000'000'000'000LL, 1'000'000'000'000LL)(rng);
}

inline std::string sigma_homomorphism(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    const Integer ux = big_coord(rng), uy = big_coord(rng), vx = big_coord(rng), vy = big_coord(rng);
    if (sigma(ux + vx, uy + vy) != (sigma(ux, uy) ^ sigma(vx, vy))) {
      return "sigma(u+v) != sigma(u) xor sigma(v) for u=(" + ux.to_string() + "," + uy.to_string() + ")";
    }
  }
  return {};
}

inline std::string one_plus_i_divisibility(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    const Integer x = big_coord(rng), y = big_coord(rng);
    const GaussianInt v(x, y);
    // v / (1 + i) = ((x + y) + (y - x) i) / 2 and v / (1 - i) = ((x - y) + (x + y) i) / 2.
    const bool by_plus = (x + y).is_even() && (y - x).is_even();
    const bool by_minus = (x - y).is_even() && (x + y).is_even();
    if (divisible_by_one_plus_i(v) != by_plus) return "1+i divisibility wrong for " + v.to_string();
    if (divisible_by_one_plus_i(v) != (sigma(v) == 0)) return "divisibility disagrees with sigma for " + v.to_string();
    if (by_plus != by_minus) return "1+i and 1-i divisibility differ for " + v.to_string();
    if (by_plus) {
      const GaussianInt q((x + y) / Integer(2), (y - x) / Integer(2));
      if (!(q * GaussianInt(1, 1) == v)) return "quotient check failed for " + v.to_string();
    }
  }
  return {};
}

inline std::string split_roundtrip(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    // Multiply in a random power of two so that large k occurs.
    const int shift = static_cast<int>(rng() % 40);
    Integer x = Integer(static_cast<std::int64_t>(rng() % 2000001) - 1000000) * Integer(std::int64_t{1} << shift);
    Integer y = Integer(static_cast<std::int64_t>(rng() % 2000001) - 1000000) * Integer(std::int64_t{1} << shift);
    const GaussianInt v(x, y);
    if (v.is_zero()) continue;
    const PowerOfTwoSplit s = split_power_of_two(v);
    Integer scale(1);
    for (int k = 0; k < s.k; ++k) scale *= Integer(2);
    if (!(GaussianInt(scale) * s.rest == v)) return "2^k * rest != v for " + v.to_string();
    if (s.rest.re().is_even() && s.rest.im().is_even()) return "rest still even for " + v.to_string();
    if (split_power_of_two(s.rest).k != 0) return "split of rest has k > 0 for " + v.to_string();
  }
  return {};
}

inline std::string norm_multiplicative(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> d(-1'000'000'000, 1'000'000'000);
  for (int i = 0; i < cases; ++i) {
    const GaussianInt u(d(rng), d(rng)), v(d(rng), d(rng));
    if (!(norm(u * v) == norm(u) * norm(v))) return "norm not multiplicative for " + u.to_string();
  }
  return {};
}

inline Triangle random_triangle(std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  for (;;) {
    LatticePoint a{d(rng), d(rng)}, b{d(rng), d(rng)}, c{d(rng), d(rng)};
    if (!cross(b - a, c - a).is_zero()) return Triangle(a, b, c);
  }
}

inline std::string condition_invariance(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> shift(-1000, 1000);
  // Bias toward small triangles so that every flag is often true.
  for (int i = 0; i < cases; ++i) {
    const Triangle t = random_triangle(rng, i % 2 ? 6 : 60);
    const ConditionVector base = classify(t);
    const LatticePoint w{shift(rng), shift(rng)};
    const auto& v = t.vertices();
    const Triangle moved(v[0] + w, v[1] + w, v[2] + w);
    const int perm = static_cast<int>(rng() % 6);
    static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    const Triangle relabeled(v[kPerms[perm][0]], v[kPerms[perm][1]], v[kPerms[perm][2]]);
    const Triangle mapped = apply_symmetry(static_cast<int>(rng() % 8), t);
    for (const Triangle* other : {&moved, &relabeled, &mapped}) {
      if (!(classify(*other) == base)) {
        std::ostringstream os;
        os << "flags changed under a lattice motion for " << t << " vs " << *other;
        return os.str();
      }
    }
  }
  return {};
}

}  // namespace props
