#pragma once

#include <bitset>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lattice/conditions.hpp"

namespace lattice {

class FlagExprError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Boolean filter over the six conditions, e.g. "h & !f" or "(f | g) & even".
///
/// Grammar: expr := term ('|' term)*; term := factor ('&' factor)*;
/// factor := '!' factor | '(' expr ')' | name | "true" | "false".
/// Names are the short or long condition names. The parsed expression is
/// stored as its truth table over all 64 condition masks.
class FlagFilter {
 public:
  /// Matches everything.
  FlagFilter() { table_.set(); }

  /// Throws FlagExprError on malformed input or unknown names.
  static FlagFilter parse(std::string_view expr);

  bool matches(std::uint8_t mask) const { return table_.test(mask); }
  bool matches(const ConditionVector& cv) const { return matches(cv.mask()); }

 private:
  explicit FlagFilter(std::bitset<64> table) : table_(table) {}
  std::bitset<64> table_;
};

}  // namespace lattice
