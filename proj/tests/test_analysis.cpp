#include <doctest.h>

#include "lattice/analysis.hpp"
#include "lattice/report_io.hpp"
#include "oracle.hpp"

using namespace lattice;

namespace {

Triangle tri(std::int64_t x1, std::int64_t y1, std::int64_t x2, std::int64_t y2) {
  return Triangle::at_origin({x1, y1}, {x2, y2});
}

constexpr std::uint8_t kF = bit(Condition::kCircumcenterLattice);
constexpr std::uint8_t kG = bit(Condition::kCentroidLattice);
constexpr std::uint8_t kH = bit(Condition::kOrthocenterLattice);
constexpr std::uint8_t kR = bit(Condition::kCircumradiusInteger);
constexpr std::uint8_t kArea = bit(Condition::kAreaInteger);
constexpr std::uint8_t kEven = bit(Condition::kEvenSideSums);

bool satisfies(const Triangle& t, std::uint8_t antecedent) {
  return (classify(t).mask() & antecedent) == antecedent;
}

}  // namespace

TEST_CASE("theorem verifiers find no counterexample at bound 20") {
  for (const auto& r : verify_all(20)) {
    INFO(to_string(r.theorem_id));
    CHECK(r.holds());
    CHECK(r.antecedent_count > 0);
    CHECK(r.triangles_checked == oracle::naive_pairs(20).size());
  }
}

TEST_CASE("theorem hypotheses and conclusions on the worked examples") {
  const Triangle fig2 = tri(12, 0, 12, 18);
  CHECK(theorem_antecedent(TheoremId::kT1, classify(fig2)));
  CHECK(theorem_conclusion(TheoremId::kT1, fig2, classify(fig2)));

  const Triangle fig4 = tri(6, 0, 8, 4);
  for (TheoremId id : {TheoremId::kT2, TheoremId::kCorollary, TheoremId::kFImpliesH, TheoremId::kT3}) {
    CHECK(theorem_antecedent(id, classify(fig4)));
    CHECK(theorem_conclusion(id, fig4, classify(fig4)));
  }

  // Even sums without a lattice circumcenter: outside the hypothesis.
  const Triangle converse = tri(2, 0, 1, 3);
  CHECK(classify(converse).even_side_sums);
  CHECK_FALSE(theorem_antecedent(TheoremId::kT2, classify(converse)));

  // H lattice but R^2 = 13/4.
  const Triangle fig1 = tri(2, 0, 2, 3);
  CHECK(classify(fig1).h_lattice);
  CHECK_FALSE(theorem_antecedent(TheoremId::kT3, classify(fig1)));
  CHECK_FALSE(theorem_antecedent(TheoremId::kFImpliesH, classify(fig1)));
}

TEST_CASE("verify reports are thread-count independent") {
  for (TheoremId id : kAllTheorems) {
    const auto a = verify(id, 12, {1});
    const auto b = verify(id, 12, {4});
    CHECK(to_json(a).dump() == to_json(b).dump());
  }
}

TEST_CASE("the miner reports the minimal counterexample for h => f") {
  MinWitness ce;
  enumerate(EnumSpec{4}, [&](const Triangle& t) {
    if (classify(t).h_lattice && !classify(t).f_lattice) ce.offer(t);
  });
  REQUIRE(ce.get().has_value());
  const auto table = mine_implications(4);
  CHECK(table.entry(kH, Condition::kCircumcenterLattice).witness == ce.get());
}

TEST_CASE("implication table structure") {
  const auto table = mine_implications(8);
  CHECK(table.entries().size() == 192);
  std::uint64_t total = 0;
  for (unsigned m = 0; m < 64; ++m) total += table.exact_mask_count(static_cast<std::uint8_t>(m));
  CHECK(total == oracle::naive_pairs(8).size());
  CHECK(table.triangles_checked() == total);

  for (const auto& e : table.entries()) {
    CHECK_FALSE((e.antecedent & bit(e.consequent)));
    CHECK(e.witness.has_value() == (e.status == EntryStatus::kRefuted));
    if (e.witness) {
      const ConditionVector cv = classify(*e.witness);
      CHECK((cv.mask() & e.antecedent) == e.antecedent);
      CHECK_FALSE(cv.get(e.consequent));
    }
    if (e.status == EntryStatus::kVacuousUpToBound) CHECK(e.antecedent_satisfiable_count == 0);
    if (e.proved) CHECK(e.status != EntryStatus::kRefuted);
    CHECK(e.antecedent_satisfiable_count == table.satisfying_count(e.antecedent));
  }
  CHECK_THROWS_AS(table.entry(kF, Condition::kCircumcenterLattice), std::out_of_range);
}

TEST_CASE("implication table matches a direct per-cell scan") {
  const std::int64_t bound = 5;
  const auto table = mine_implications(bound);
  std::vector<std::pair<Triangle, std::uint8_t>> all;
  enumerate(EnumSpec{bound}, [&](const Triangle& t) { all.emplace_back(t, classify(t).mask()); });
  for (const auto& e : table.entries()) {
    MinWitness w;
    std::uint64_t sat = 0;
    for (const auto& [t, m] : all) {
      if ((m & e.antecedent) != e.antecedent) continue;
      ++sat;
      if (!(m & bit(e.consequent))) w.offer(t);
    }
    CHECK(sat == e.antecedent_satisfiable_count);
    CHECK(w.get() == e.witness);
  }
}

TEST_CASE("known table entries") {
  const auto table = mine_implications(18);
  using C = Condition;
  CHECK(table.entry(kF, C::kOrthocenterLattice).status == EntryStatus::kHoldsUpToBound);
  CHECK(table.entry(kF, C::kAreaInteger).status == EntryStatus::kHoldsUpToBound);
  CHECK(table.entry(kF, C::kEvenSideSums).status == EntryStatus::kHoldsUpToBound);
  CHECK(table.entry(kH | kR, C::kCircumcenterLattice).status == EntryStatus::kHoldsUpToBound);
  CHECK(table.entry(kF, C::kOrthocenterLattice).proved);
  CHECK(table.entry(kH | kR, C::kEvenSideSums).proved);
  CHECK_FALSE(table.entry(kG | kH, C::kCircumcenterLattice).proved);

  const auto& hf = table.entry(kH, C::kCircumcenterLattice);
  REQUIRE(hf.status == EntryStatus::kRefuted);
  CHECK(witness_key(*hf.witness) <= witness_key(tri(2, 0, 2, 3)));

  const auto& ghf = table.entry(kG | kH, C::kCircumcenterLattice);
  REQUIRE(ghf.status == EntryStatus::kRefuted);
  CHECK(satisfies(tri(3, 3, 3, 18), kG | kH));
  CHECK_FALSE(classify(tri(3, 3, 3, 18)).f_lattice);

  const auto& fhg = table.entry(kF | kH, C::kCentroidLattice);
  REQUIRE(fhg.status == EntryStatus::kRefuted);
  CHECK(witness_key(*fhg.witness) <= witness_key(tri(6, 0, 8, 4)));

  CHECK(table.entry(kH, C::kCentroidLattice).status == EntryStatus::kRefuted);
  CHECK(table.entry(kG | kEven | kArea, C::kCircumcenterLattice).status == EntryStatus::kRefuted);

  const auto& big = table.entry(kG | kH | kEven | kArea, C::kCircumcenterLattice);
  REQUIRE(big.status == EntryStatus::kRefuted);
  CHECK(satisfies(tri(12, 6, 12, 18), kG | kH | kEven | kArea));
  CHECK_FALSE(classify(tri(12, 6, 12, 18)).f_lattice);
}

TEST_CASE("all six conditions together") {
  const Triangle t = tri(18, 0, 24, 12);
  CHECK(classify(t).mask() == kAllConditionsMask);
  CHECK(circumcenter(t) == RationalPoint{9, 12});
  CHECK(centroid(t) == RationalPoint{14, 4});
  CHECK(orthocenter(t) == RationalPoint{24, -12});
  CHECK(circumradius_squared(t) == Rational(225));
  CHECK(area_twice(t) == 216);
  auto flags = oracle::flags({0, 0}, {18, 0}, {24, 12});
  for (bool f : flags) CHECK(f);
}

TEST_CASE("witnesses persist as the bound grows") {
  const auto small = mine_implications(6);
  const auto large = mine_implications(10);
  for (std::size_t i = 0; i < small.entries().size(); ++i) {
    const auto& a = small.entries()[i];
    const auto& b = large.entries()[i];
    if (a.status == EntryStatus::kRefuted) {
      CHECK(b.status == EntryStatus::kRefuted);
      CHECK(witness_key(*b.witness) <= witness_key(*a.witness));
    }
  }
}

TEST_CASE("mining is deterministic across runs and thread counts") {
  const std::string a = to_json(mine_implications(9, {1})).dump();
  CHECK(a == to_json(mine_implications(9, {1})).dump());
  CHECK(a == to_json(mine_implications(9, {5})).dump());
  const std::string d1 = to_json(mine_implications(7, {1, true})).dump();
  CHECK(d1 == to_json(mine_implications(7, {3, true})).dump());
}

TEST_CASE("dedupe mining agrees on which cells are refuted") {
  const auto plain = mine_implications(7);
  const auto orbits = mine_implications(7, {1, true});
  for (std::size_t i = 0; i < plain.entries().size(); ++i) {
    CHECK(plain.entries()[i].status == orbits.entries()[i].status);
  }
}

TEST_CASE("euler_line_empty_scan") {
  const auto found = euler_line_empty_scan(5);
  const Triangle fig3 = canonical_form(tri(4, 2, 1, 5));
  CHECK(std::find(found.begin(), found.end(), fig3) != found.end());
  for (const Triangle& t : found) {
    CHECK_FALSE(euler_line_lattice_point(t).has_value());
    const RationalLine l = euler_line(t);
    CHECK_FALSE((l.c % gcd(l.a, l.b)).is_zero());
    CHECK_FALSE(classify(t).g_lattice);
    CHECK_FALSE(classify(t).f_lattice);
  }
  for (const Triangle& t : euler_line_empty_scan(2)) CHECK_FALSE(euler_line_lattice_point(t).has_value());
}

TEST_CASE("family_area_n") {
  CHECK(family_area_n(1) == tri(2, 0, 1, 1));
  CHECK(circumcenter(family_area_n(1)) == RationalPoint{1, 0});
  CHECK(area_twice(family_area_n(1)) == 2);
  CHECK(area_twice(family_area_n(5)) == 10);
  CHECK(circumcenter(family_area_n(5)) == RationalPoint{1, 4});
  CHECK(classify(family_area_n(12)).f_lattice);
  CHECK(area_twice(family_area_n(12)) == 24);
  CHECK_THROWS_AS(family_area_n(0), std::invalid_argument);
  for (std::int64_t n = 1; n <= 20; ++n) {
    const Triangle t = family_area_n(n);
    const auto f = oracle::circumcenter({0, 0}, {2, 0}, {n, n});
    CHECK(oracle::same(f, circumcenter(t)));
  }
}
