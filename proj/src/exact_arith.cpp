#include "lattice/exact_arith.hpp"

#include <algorithm>
#include <limits>

namespace lattice {

Integer Integer::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw std::invalid_argument("malformed integer literal: " + std::string(text));
  Integer acc;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') {
      throw std::invalid_argument("malformed integer literal: " + std::string(text));
    }
    // Accumulate negatively so the minimum value parses too.
    acc = acc * Integer(10) - Integer(c - '0');
  }
  return negative ? acc : -acc;
}

std::int64_t Integer::to_int64() const {
  if (v_ < std::numeric_limits<std::int64_t>::min() ||
      v_ > std::numeric_limits<std::int64_t>::max()) {
    throw OverflowError("Integer does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v_);
}

std::string Integer::to_string() const {
  if (v_ == 0) return "0";
  std::string out;
  raw_type v = v_;
  bool negative = v < 0;
  while (v != 0) {
    int digit = static_cast<int>(v % 10);
    out.push_back(static_cast<char>('0' + (digit < 0 ? -digit : digit)));
    v /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Integer abs(Integer v) { return v.sign() < 0 ? -v : v; }

Integer floor_div(Integer a, Integer b) {
  Integer q = a / b;
  if (!(a % b).is_zero() && ((a.sign() < 0) != (b.sign() < 0))) q -= Integer(1);
  return q;
}

Integer floor_mod(Integer a, Integer b) { return a - floor_div(a, b) * b; }

Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (!b.is_zero()) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Integer gcd_many(std::span<const Integer> values) {
  Integer g;
  for (const Integer& v : values) {
    g = gcd(g, v);
    if (g == Integer(1)) break;
  }
  return g;
}

ExtendedGcd extended_gcd(Integer a, Integer b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (!r.is_zero()) {
    Integer q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r.sign() < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Integer int_sqrt_floor(Integer n) {
  if (n.sign() < 0) throw std::domain_error("square root of a negative integer");
  if (n < Integer(2)) return n;
  auto u = static_cast<unsigned __int128>(n.raw());
  int bits = 0;
  for (auto t = u; t != 0; t >>= 1) ++bits;
  // 2^ceil(bits/2) >= sqrt(n); Newton then decreases monotonically to the floor.
  unsigned __int128 x = static_cast<unsigned __int128>(1) << ((bits + 1) / 2);
  for (;;) {
    unsigned __int128 y = (x + u / x) / 2;
    if (y >= x) break;
    x = y;
  }
  return Integer::from_raw(static_cast<Integer::raw_type>(x));
}

namespace {

// Quadratic residues modulo 64, 63, 65 and 11 reject about 99% of non-squares cheaply.
constexpr bool is_square_residue(unsigned r, unsigned m) {
  for (unsigned i = 0; i < m; ++i) {
    if ((i * i) % m == r) return true;
  }
  return false;
}

template <unsigned M>
struct ResidueTable {
  bool ok[M] = {};
  constexpr ResidueTable() {
    for (unsigned r = 0; r < M; ++r) ok[r] = is_square_residue(r, M);
  }
};

constexpr ResidueTable<64> kRes64{};
constexpr ResidueTable<63> kRes63{};
constexpr ResidueTable<65> kRes65{};
constexpr ResidueTable<11> kRes11{};

}  // namespace

std::optional<Integer> int_sqrt_exact(Integer n) {
  if (n.sign() < 0) throw std::domain_error("square root of a negative integer");
  auto u = static_cast<unsigned __int128>(n.raw());
  if (!kRes64.ok[static_cast<unsigned>(u & 63)]) return std::nullopt;
  auto m = static_cast<unsigned>(u % (63u * 65u * 11u));
  if (!kRes63.ok[m % 63] || !kRes65.ok[m % 65] || !kRes11.ok[m % 11]) return std::nullopt;
  Integer r = int_sqrt_floor(n);
  if (r * r == n) return r;
  return std::nullopt;
}

Rational::Rational(Integer num, Integer den) {
  if (den.is_zero()) throw std::domain_error("rational with zero denominator");
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  Integer g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-reduce first to keep intermediates small.
  Integer g1 = gcd(a.num_, b.den_);
  Integer g2 = gcd(b.num_, a.den_);
  return Rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1),
                  Rational::Canonical{});
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  return a * Rational(b.den_, b.num_);
}

Rational Rational::operator-() const { return Rational(-num_, den_, Canonical{}); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

std::string GaussianInt::to_string() const {
  std::string out = re_.to_string();
  out += im_.sign() < 0 ? "-" : "+";
  out += abs(im_).to_string();
  out += "i";
  return out;
}

PowerOfTwoSplit split_power_of_two(const GaussianInt& v) {
  if (v.is_zero()) throw std::invalid_argument("split_power_of_two of zero");
  PowerOfTwoSplit out{0, v};
  while (out.rest.re().is_even() && out.rest.im().is_even()) {
    out.rest = GaussianInt(out.rest.re() / Integer(2), out.rest.im() / Integer(2));
    ++out.k;
  }
  return out;
}

}  // namespace lattice
