#include "lattice/analysis.hpp"

#include <stdexcept>

namespace lattice {

namespace {

constexpr std::uint8_t kF = bit(Condition::kCircumcenterLattice);
constexpr std::uint8_t kG = bit(Condition::kCentroidLattice);
constexpr std::uint8_t kH = bit(Condition::kOrthocenterLattice);
constexpr std::uint8_t kR = bit(Condition::kCircumradiusInteger);
constexpr std::uint8_t kArea = bit(Condition::kAreaInteger);
constexpr std::uint8_t kEven = bit(Condition::kEvenSideSums);

EnumSpec spec_for(std::int64_t bound, const RunOptions& options) {
  return {bound, options.primitive_only, options.dedupe};
}

struct VerifyAcc {
  std::uint64_t checked = 0;
  std::uint64_t antecedent = 0;
  MinWitness counterexample;
};

struct MineAcc {
  std::array<std::uint64_t, ImplicationTable::kMaskCount> counts{};
  std::array<MinWitness, ImplicationTable::kMaskCount> best{};
};

}  // namespace

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::kT1: return "T1";
    case TheoremId::kT2: return "T2";
    case TheoremId::kCorollary: return "COR";
    case TheoremId::kT3: return "T3";
    case TheoremId::kFImpliesH: return "F_IMPLIES_H";
  }
  return "?";
}

std::string_view describe(TheoremId id) {
  switch (id) {
    case TheoremId::kT1: return "F and G lattice points => gcd(x1,y1,x2,y2) divisible by 3";
    case TheoremId::kT2: return "F lattice point => x1+y1 and x2+y2 even";
    case TheoremId::kCorollary: return "F lattice point => area is an integer";
    case TheoremId::kT3: return "H lattice point and R integer => F lattice point";
    case TheoremId::kFImpliesH: return "F lattice point => H lattice point";
  }
  return "?";
}

bool theorem_antecedent(TheoremId id, const ConditionVector& cv) {
  switch (id) {
    case TheoremId::kT1: return cv.f_lattice && cv.g_lattice;
    case TheoremId::kT2:
    case TheoremId::kCorollary:
    case TheoremId::kFImpliesH: return cv.f_lattice;
    case TheoremId::kT3: return cv.h_lattice && cv.circumradius_integer;
  }
  return false;
}

bool theorem_conclusion(TheoremId id, const Triangle& t, const ConditionVector& cv) {
  switch (id) {
    case TheoremId::kT1: return (primitive_gcd(t) % Integer(3)).is_zero();
    case TheoremId::kT2: return cv.even_side_sums;
    case TheoremId::kCorollary: return cv.area_integer;
    case TheoremId::kT3: return cv.f_lattice;
    case TheoremId::kFImpliesH: return cv.h_lattice;
  }
  return false;
}

VerificationReport verify(TheoremId id, std::int64_t bound, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerifyAcc acc = parallel_reduce(
      spec_for(bound, options), options.threads, VerifyAcc{},
      [id](VerifyAcc& a, const Triangle& t) {
        ++a.checked;
        const ConditionVector cv = classify(t);
        if (!theorem_antecedent(id, cv)) return;
        ++a.antecedent;
        if (!theorem_conclusion(id, t, cv)) a.counterexample.offer(t);
      },
      [](VerifyAcc& into, VerifyAcc&& part) {
        into.checked += part.checked;
        into.antecedent += part.antecedent;
        into.counterexample.merge(part.counterexample);
      });
  VerificationReport report{id, bound, acc.checked, acc.antecedent, acc.counterexample.get(), {}};
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

std::vector<VerificationReport> verify_all(std::int64_t bound, const RunOptions& options) {
  std::vector<VerificationReport> out;
  for (TheoremId id : kAllTheorems) out.push_back(verify(id, bound, options));
  return out;
}

std::string_view to_string(EntryStatus s) {
  switch (s) {
    case EntryStatus::kRefuted: return "REFUTED";
    case EntryStatus::kHoldsUpToBound: return "HOLDS_UP_TO_BOUND";
    case EntryStatus::kVacuousUpToBound: return "VACUOUS_UP_TO_BOUND";
  }
  return "?";
}

bool proved_implication(std::uint8_t antecedent, Condition consequent) {
  std::uint8_t closure = antecedent;
  for (;;) {
    std::uint8_t next = closure;
    if ((next & kH) && (next & kR)) next |= kF;
    if (next & kF) next |= kH | kArea | kEven;
    if (next == closure) break;
    closure = next;
  }
  return (closure & bit(consequent)) != 0;
}

ImplicationTable::ImplicationTable(std::int64_t bound, bool dedupe,
                                   std::array<std::uint64_t, kMaskCount> exact_counts,
                                   std::array<std::optional<Triangle>, kMaskCount> exact_witnesses)
    : bound_(bound),
      dedupe_(dedupe),
      exact_counts_(exact_counts),
      exact_witnesses_(std::move(exact_witnesses)) {
  entries_.reserve(kEntryCount);
  for (unsigned a = 0; a < kMaskCount; ++a) {
    const auto antecedent = static_cast<std::uint8_t>(a);
    for (Condition c : kAllConditions) {
      if (antecedent & bit(c)) continue;
      MinWitness witness;
      std::uint64_t satisfiable = 0;
      for (unsigned m = 0; m < kMaskCount; ++m) {
        if ((m & antecedent) != antecedent) continue;
        satisfiable += exact_counts_[m];
        if (!(m & bit(c)) && exact_witnesses_[m]) witness.offer(*exact_witnesses_[m]);
      }
      ImplicationEntry e;
      e.antecedent = antecedent;
      e.consequent = c;
      e.antecedent_satisfiable_count = satisfiable;
      e.witness = witness.get();
      e.proved = proved_implication(antecedent, c);
      if (e.witness) {
        e.status = EntryStatus::kRefuted;
      } else if (satisfiable == 0) {
        e.status = EntryStatus::kVacuousUpToBound;
      } else {
        e.status = EntryStatus::kHoldsUpToBound;
      }
      entries_.push_back(std::move(e));
    }
  }
}

std::uint64_t ImplicationTable::triangles_checked() const { return satisfying_count(0); }

const ImplicationEntry& ImplicationTable::entry(std::uint8_t antecedent, Condition consequent) const {
  for (const auto& e : entries_) {
    if (e.antecedent == antecedent && e.consequent == consequent) return e;
  }
  throw std::out_of_range("no implication entry: consequent is part of the antecedent");
}

std::uint64_t ImplicationTable::satisfying_count(std::uint8_t mask) const {
  std::uint64_t total = 0;
  for (unsigned m = 0; m < kMaskCount; ++m) {
    if ((m & mask) == mask) total += exact_counts_[m];
  }
  return total;
}

std::optional<Triangle> ImplicationTable::satisfying_witness(std::uint8_t mask) const {
  MinWitness best;
  for (unsigned m = 0; m < kMaskCount; ++m) {
    if ((m & mask) == mask && exact_witnesses_[m]) best.offer(*exact_witnesses_[m]);
  }
  return best.get();
}

ImplicationTable mine_implications(std::int64_t bound, const RunOptions& options) {
  MineAcc acc = parallel_reduce(
      spec_for(bound, options), options.threads, MineAcc{},
      [](MineAcc& a, const Triangle& t) {
        const std::uint8_t m = classify(t).mask();
        ++a.counts[m];
        a.best[m].offer(t);
      },
      [](MineAcc& into, MineAcc&& part) {
        for (std::size_t m = 0; m < ImplicationTable::kMaskCount; ++m) {
          into.counts[m] += part.counts[m];
          into.best[m].merge(part.best[m]);
        }
      });
  std::array<std::optional<Triangle>, ImplicationTable::kMaskCount> witnesses;
  for (std::size_t m = 0; m < witnesses.size(); ++m) witnesses[m] = acc.best[m].get();
  return ImplicationTable(bound, options.dedupe, acc.counts, std::move(witnesses));
}

std::vector<Triangle> euler_line_empty_scan(std::int64_t bound, unsigned threads) {
  std::vector<Triangle> out;
  for (const Triangle& t : orbit_representatives({bound, false, true}, threads)) {
    const ConditionVector cv = classify(t);
    // A lattice F or G is itself a lattice point of the line.
    if (cv.f_lattice || cv.g_lattice) continue;
    const RationalPoint f = circumcenter(t);
    const RationalPoint g = centroid(t);
    if (f == g) continue;
    if (!lattice_point_on(line_through(f, g))) out.push_back(t);
  }
  return out;
}

Triangle family_area_n(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("family_area_n requires n >= 1");
  return Triangle::at_origin({2, 0}, {n, n});
}

}  // namespace lattice
