#pragma once

/**
 * \file
 * Bounded exhaustive checks of the known implications between the six
 * conditions, and the miner that fills in the whole implication table.
 *
 * Everything here runs over `enumerate` / `parallel_reduce`; counterexamples
 * and witnesses are always the minimum under `WitnessKey`, so reports are
 * identical for any thread count.
 */

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lattice/conditions.hpp"
#include "lattice/enumeration.hpp"

namespace lattice {

struct RunOptions {
  unsigned threads = 1;
  bool dedupe = false;
  bool primitive_only = false;
};

enum class TheoremId {
  kT1,         // f and g lattice => 3 | primitive_gcd
  kT2,         // f lattice => even side sums
  kCorollary,  // f lattice => integer area
  kT3,         // h lattice and integer R => f lattice
  kFImpliesH,  // f lattice => h lattice
};

inline constexpr std::array<TheoremId, 5> kAllTheorems = {
    TheoremId::kT1, TheoremId::kT2, TheoremId::kCorollary, TheoremId::kT3, TheoremId::kFImpliesH};

/// "T1", "T2", "COR", "T3", "F_IMPLIES_H".
std::string_view to_string(TheoremId id);
std::string_view describe(TheoremId id);

struct VerificationReport {
  TheoremId theorem_id;
  std::int64_t bound = 0;
  std::uint64_t triangles_checked = 0;
  std::uint64_t antecedent_count = 0;
  std::optional<Triangle> counterexample;
  std::chrono::nanoseconds elapsed{0};

  bool holds() const { return !counterexample.has_value(); }
};

/// Whether the hypothesis of `id` holds for a triangle with conditions `cv`.
bool theorem_antecedent(TheoremId id, const ConditionVector& cv);
/// Whether the conclusion holds (the triangle is needed for the gcd test).
bool theorem_conclusion(TheoremId id, const Triangle& t, const ConditionVector& cv);

VerificationReport verify(TheoremId id, std::int64_t bound, const RunOptions& options = {});

inline VerificationReport verify_theorem1(std::int64_t bound, const RunOptions& o = {}) {
  return verify(TheoremId::kT1, bound, o);
}
inline VerificationReport verify_theorem2(std::int64_t bound, const RunOptions& o = {}) {
  return verify(TheoremId::kT2, bound, o);
}
inline VerificationReport verify_corollary(std::int64_t bound, const RunOptions& o = {}) {
  return verify(TheoremId::kCorollary, bound, o);
}
inline VerificationReport verify_theorem3(std::int64_t bound, const RunOptions& o = {}) {
  return verify(TheoremId::kT3, bound, o);
}
inline VerificationReport verify_f_implies_h(std::int64_t bound, const RunOptions& o = {}) {
  return verify(TheoremId::kFImpliesH, bound, o);
}

/// All five verifiers, in kAllTheorems order.
std::vector<VerificationReport> verify_all(std::int64_t bound, const RunOptions& options = {});

enum class EntryStatus { kRefuted, kHoldsUpToBound, kVacuousUpToBound };

/// "REFUTED", "HOLDS_UP_TO_BOUND", "VACUOUS_UP_TO_BOUND".
std::string_view to_string(EntryStatus s);

struct ImplicationEntry {
  std::uint8_t antecedent = 0;
  Condition consequent = Condition::kCircumcenterLattice;
  EntryStatus status = EntryStatus::kVacuousUpToBound;
  std::optional<Triangle> witness;  // present iff REFUTED
  std::uint64_t antecedent_satisfiable_count = 0;
  bool proved = false;  // follows from the proved implications
};

/// True when `consequent` is in the closure of `antecedent` under
/// f=>h, f=>area, f=>even and {h, r}=>f.
bool proved_implication(std::uint8_t antecedent, Condition consequent);

class ImplicationTable {
 public:
  static constexpr std::size_t kMaskCount = 64;
  static constexpr std::size_t kEntryCount = 192;

  /// Per exact condition mask: how many triangles have exactly that mask, and the minimal one.
  ImplicationTable(std::int64_t bound, bool dedupe, std::array<std::uint64_t, kMaskCount> exact_counts,
                   std::array<std::optional<Triangle>, kMaskCount> exact_witnesses);

  std::int64_t bound() const { return bound_; }
  bool dedupe() const { return dedupe_; }
  std::uint64_t triangles_checked() const;

  /// All 192 entries ordered by antecedent mask, then consequent index.
  const std::vector<ImplicationEntry>& entries() const { return entries_; }
  /// Throws std::out_of_range if consequent is part of antecedent.
  const ImplicationEntry& entry(std::uint8_t antecedent, Condition consequent) const;

  std::uint64_t exact_mask_count(std::uint8_t mask) const { return exact_counts_.at(mask); }
  /// Number of triangles satisfying every condition in `mask`.
  std::uint64_t satisfying_count(std::uint8_t mask) const;
  /// Minimal triangle satisfying every condition in `mask`.
  std::optional<Triangle> satisfying_witness(std::uint8_t mask) const;

 private:
  std::int64_t bound_;
  bool dedupe_;
  std::array<std::uint64_t, kMaskCount> exact_counts_;
  std::array<std::optional<Triangle>, kMaskCount> exact_witnesses_;
  std::vector<ImplicationEntry> entries_;
};

ImplicationTable mine_implications(std::int64_t bound, const RunOptions& options = {});

/// Orbit representatives (dedupe on) whose Euler line carries no lattice point.
std::vector<Triangle> euler_line_empty_scan(std::int64_t bound, unsigned threads = 1);

/// O, (2, 0), (n, n): area n, circumcenter (1, n - 1). Throws std::invalid_argument for n < 1.
Triangle family_area_n(std::int64_t n);

}  // namespace lattice
