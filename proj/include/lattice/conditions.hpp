#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lattice/triangle_centers.hpp"

namespace lattice {

/// The six lattice/integrality conditions, in their fixed serialization order.
enum class Condition : int {
  kCircumcenterLattice = 0,  // f
  kCentroidLattice = 1,      // g
  kOrthocenterLattice = 2,   // h
  kCircumradiusInteger = 3,  // r
  kAreaInteger = 4,          // area
  kEvenSideSums = 5,         // even
};

inline constexpr int kConditionCount = 6;
inline constexpr std::uint8_t kAllConditionsMask = (1u << kConditionCount) - 1;

inline constexpr std::array<Condition, kConditionCount> kAllConditions = {
    Condition::kCircumcenterLattice, Condition::kCentroidLattice,
    Condition::kOrthocenterLattice,  Condition::kCircumradiusInteger,
    Condition::kAreaInteger,         Condition::kEvenSideSums};

/// Short name: f, g, h, r, area, even.
std::string_view short_name(Condition c);
/// JSON field name: f_lattice, g_lattice, ...
std::string_view long_name(Condition c);
/// Accepts either the short or the long name.
std::optional<Condition> condition_from_name(std::string_view name);

constexpr std::uint8_t bit(Condition c) { return static_cast<std::uint8_t>(1u << static_cast<int>(c)); }

struct ConditionVector {
  bool f_lattice = false;
  bool g_lattice = false;
  bool h_lattice = false;
  bool circumradius_integer = false;
  bool area_integer = false;
  bool even_side_sums = false;

  bool get(Condition c) const;
  /// Bit i set iff condition i holds.
  std::uint8_t mask() const;
  static ConditionVector from_mask(std::uint8_t mask);
  /// Fixed-order 6-character "0"/"1" string, f first.
  std::string to_bitstring() const;

  friend bool operator==(const ConditionVector&, const ConditionVector&) = default;
};

std::string mask_to_bitstring(std::uint8_t mask);

/// Evaluates all six conditions with exact integer divisibility tests.
ConditionVector classify(const Triangle& t);

/// gcd of the four coordinates of the side vectors based at v3.
Integer primitive_gcd(const Triangle& t);

}  // namespace lattice
