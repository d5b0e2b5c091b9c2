#include "lattice/conditions.hpp"

namespace lattice {

namespace {

constexpr std::array<std::string_view, kConditionCount> kShortNames = {"f", "g", "h", "r", "area", "even"};
constexpr std::array<std::string_view, kConditionCount> kLongNames = {
    "f_lattice", "g_lattice", "h_lattice", "circumradius_integer", "area_integer", "even_side_sums"};

bool divides(Integer d, Integer n) { return (n % d).is_zero(); }

}  // namespace

std::string_view short_name(Condition c) { return kShortNames[static_cast<int>(c)]; }
std::string_view long_name(Condition c) { return kLongNames[static_cast<int>(c)]; }

std::optional<Condition> condition_from_name(std::string_view name) {
  for (int i = 0; i < kConditionCount; ++i) {
    if (name == kShortNames[i] || name == kLongNames[i]) return static_cast<Condition>(i);
  }
  return std::nullopt;
}

bool ConditionVector::get(Condition c) const {
  switch (c) {
    case Condition::kCircumcenterLattice: return f_lattice;
    case Condition::kCentroidLattice: return g_lattice;
    case Condition::kOrthocenterLattice: return h_lattice;
    case Condition::kCircumradiusInteger: return circumradius_integer;
    case Condition::kAreaInteger: return area_integer;
    case Condition::kEvenSideSums: return even_side_sums;
  }
  return false;
}

std::uint8_t ConditionVector::mask() const {
  std::uint8_t m = 0;
  for (Condition c : kAllConditions) {
    if (get(c)) m |= bit(c);
  }
  return m;
}

ConditionVector ConditionVector::from_mask(std::uint8_t mask) {
  auto has = [mask](Condition c) { return (mask & bit(c)) != 0; };
  return {has(Condition::kCircumcenterLattice), has(Condition::kCentroidLattice),
          has(Condition::kOrthocenterLattice),  has(Condition::kCircumradiusInteger),
          has(Condition::kAreaInteger),         has(Condition::kEvenSideSums)};
}

std::string mask_to_bitstring(std::uint8_t mask) {
  std::string out(kConditionCount, '0');
  for (int i = 0; i < kConditionCount; ++i) {
    if (mask & (1u << i)) out[i] = '1';
  }
  return out;
}

std::string ConditionVector::to_bitstring() const { return mask_to_bitstring(mask()); }

ConditionVector classify(const Triangle& t) {
  // Same quantities as circumcenter(): with u, w the side vectors at v3,
  // F - v3 = (b, -a) / (2d) and 2F - 2 v3 = (b, -a) / d.
  const LatticePoint u = t.side1();
  const LatticePoint w = t.side2();
  const Integer uu = dot(u, u);
  const Integer ww = dot(w, w);
  const Integer a = ww * u.x - uu * w.x;
  const Integer b = ww * u.y - uu * w.y;
  const Integer d = w.x * u.y - u.x * w.y;
  const Integer twice_d = Integer(2) * d;

  ConditionVector cv;
  cv.f_lattice = divides(twice_d, a) && divides(twice_d, b);
  const LatticePoint sum = t.v1() + t.v2() + t.v3();
  cv.g_lattice = divides(3, sum.x) && divides(3, sum.y);
  // H = (v1 + v2 + v3) - 2F, so H is a lattice point iff 2F is.
  cv.h_lattice = divides(d, a) && divides(d, b);

  // R^2 = (a^2 + b^2) / (4 d^2); R is an integer iff that quotient is an integral square.
  const Integer four_d2 = twice_d * twice_d;
  const Integer n = a * a + b * b;
  cv.circumradius_integer = divides(four_d2, n) && int_sqrt_exact(n / four_d2).has_value();

  cv.area_integer = d.is_even();
  cv.even_side_sums = sigma(u) == 0 && sigma(w) == 0;
  return cv;
}

Integer primitive_gcd(const Triangle& t) {
  const LatticePoint u = t.side1();
  const LatticePoint w = t.side2();
  return gcd_many({u.x, u.y, w.x, w.y});
}

}  // namespace lattice
