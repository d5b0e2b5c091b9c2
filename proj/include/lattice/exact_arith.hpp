#pragma once

/**
 * \file
 * Exact integers, rationals and Gaussian integers.
 *
 * `Integer` is a 128-bit signed integer whose every operation is checked:
 * an overflow throws `OverflowError` instead of wrapping. Lattice triangles
 * with coordinates bounded by B produce intermediates of size O(B^6) at
 * worst (squared circumradius numerators), which stays in range for
 * B up to about 10^6.
 */

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

namespace lattice {

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class Integer {
 public:
  using raw_type = __int128;

  constexpr Integer() = default;

  template <typename T>
    requires std::is_integral_v<T> && (sizeof(T) <= 8)
  constexpr Integer(T v) : v_(static_cast<raw_type>(v)) {}  // NOLINT: implicit by intent

  static constexpr Integer from_raw(raw_type v) {
    Integer r;
    r.v_ = v;
    return r;
  }

  /// Parses an optionally signed decimal literal. Throws std::invalid_argument.
  static Integer parse(std::string_view text);

  constexpr raw_type raw() const { return v_; }

  friend Integer operator+(Integer a, Integer b) {
    raw_type r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("Integer addition overflow");
    return from_raw(r);
  }
  friend Integer operator-(Integer a, Integer b) {
    raw_type r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("Integer subtraction overflow");
    return from_raw(r);
  }
  friend Integer operator*(Integer a, Integer b) {
    raw_type r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("Integer multiplication overflow");
    return from_raw(r);
  }
  // Truncating division, like the builtin types.
  friend Integer operator/(Integer a, Integer b) {
    check_division(a, b);
    return from_raw(a.v_ / b.v_);
  }
  friend Integer operator%(Integer a, Integer b) {
    check_division(a, b);
    return from_raw(a.v_ % b.v_);
  }
  Integer operator-() const { return Integer{} - *this; }

  Integer& operator+=(Integer o) { return *this = *this + o; }
  Integer& operator-=(Integer o) { return *this = *this - o; }
  Integer& operator*=(Integer o) { return *this = *this * o; }
  Integer& operator/=(Integer o) { return *this = *this / o; }
  Integer& operator%=(Integer o) { return *this = *this % o; }

  friend constexpr bool operator==(Integer, Integer) = default;
  friend constexpr std::strong_ordering operator<=>(Integer a, Integer b) {
    return a.v_ <=> b.v_;
  }

  constexpr bool is_zero() const { return v_ == 0; }
  constexpr bool is_even() const { return (v_ & 1) == 0; }
  constexpr int sign() const { return (v_ > 0) - (v_ < 0); }

  /// Checked narrowing; throws OverflowError if the value does not fit.
  std::int64_t to_int64() const;
  double to_double() const { return static_cast<double>(v_); }
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, Integer v) { return os << v.to_string(); }

 private:
  static void check_division(Integer a, Integer b) {
    if (b.v_ == 0) throw std::domain_error("Integer division by zero");
    if (b.v_ == -1 && a.v_ == min_raw()) throw OverflowError("Integer division overflow");
  }
  static constexpr raw_type min_raw() {
    return static_cast<raw_type>(static_cast<unsigned __int128>(1) << 127);
  }

  raw_type v_ = 0;
};

Integer abs(Integer v);

/// Floor division and the matching nonnegative remainder (for b > 0).
Integer floor_div(Integer a, Integer b);
Integer floor_mod(Integer a, Integer b);

/// Nonnegative gcd; gcd(0, 0) = 0.
Integer gcd(Integer a, Integer b);
Integer gcd_many(std::span<const Integer> values);
inline Integer gcd_many(std::initializer_list<Integer> values) {
  return gcd_many(std::span<const Integer>(values.begin(), values.size()));
}

struct ExtendedGcd {
  Integer g;  // >= 0
  Integer x;
  Integer y;  // a*x + b*y == g
};
ExtendedGcd extended_gcd(Integer a, Integer b);

/// floor(sqrt(n)) by exact integer Newton iteration. Throws std::domain_error for n < 0.
Integer int_sqrt_floor(Integer n);

/// r with r*r == n, or nullopt when n is not a perfect square. Throws for n < 0.
std::optional<Integer> int_sqrt_exact(Integer n);

/// Parity of x + y: the reduction of x + y modulo 2, as 0 or 1.
inline int sigma(Integer x, Integer y) {
  return static_cast<int>(((x.raw() & 1) ^ (y.raw() & 1)) & 1);
}

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer n) : num_(n), den_(1) {}  // NOLINT
  template <typename T>
    requires std::is_integral_v<T>
  Rational(T n) : Rational(Integer(n)) {}  // NOLINT

  /// Throws std::domain_error for a zero denominator.
  Rational(Integer num, Integer den);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_integer() const { return den_ == Integer(1); }
  bool is_zero() const { return num_.is_zero(); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws std::domain_error when b is zero.
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  double to_double() const { return num_.to_double() / den_.to_double(); }
  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  struct Canonical {};
  Rational(Integer num, Integer den, Canonical) : num_(num), den_(den) {}

  Integer num_;
  Integer den_;
};

class GaussianInt {
 public:
  GaussianInt() = default;
  GaussianInt(Integer re, Integer im = Integer(0)) : re_(re), im_(im) {}  // NOLINT

  const Integer& re() const { return re_; }
  const Integer& im() const { return im_; }

  friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;

  GaussianInt conj() const { return {re_, -im_}; }
  Integer norm() const { return re_ * re_ + im_ * im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const GaussianInt& g) {
    return os << g.to_string();
  }

 private:
  Integer re_;
  Integer im_;
};

inline GaussianInt conj(const GaussianInt& v) { return v.conj(); }
inline Integer norm(const GaussianInt& v) { return v.norm(); }
inline int sigma(const GaussianInt& v) { return sigma(v.re(), v.im()); }

/// 1 + i divides v in Z[i]. Same predicate as divisibility by 1 - i.
inline bool divisible_by_one_plus_i(const GaussianInt& v) { return sigma(v) == 0; }

struct PowerOfTwoSplit {
  int k;
  GaussianInt rest;  // v == 2^k * rest, components of rest not both even
};

/// Throws std::invalid_argument for v == 0.
PowerOfTwoSplit split_power_of_two(const GaussianInt& v);

}  // namespace lattice

template <>
struct std::hash<lattice::Integer> {
  std::size_t operator()(lattice::Integer v) const noexcept {
    auto u = static_cast<unsigned __int128>(v.raw());
    auto lo = static_cast<std::uint64_t>(u);
    auto hi = static_cast<std::uint64_t>(u >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};
