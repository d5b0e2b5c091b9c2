#include "lattice/enumeration.hpp"

namespace lattice {

namespace {

// Keeps every intermediate of classify() well inside 128 bits.
constexpr std::int64_t kMaxBound = 1'000'000;

using Coords = std::array<Integer, 4>;

}  // namespace

void validate(const EnumSpec& spec) {
  if (spec.bound < 1) throw std::invalid_argument("enumeration bound must be at least 1");
  if (spec.bound > kMaxBound) throw std::invalid_argument("enumeration bound exceeds 1000000");
}

std::size_t chunk_count(const EnumSpec& spec) { return static_cast<std::size_t>(2 * spec.bound + 1); }

Triangle canonical_form(const Triangle& t) {
  const auto& v = t.vertices();
  std::optional<Coords> best;
  for (int base = 0; base < 3; ++base) {
    const LatticePoint p = v[(base + 1) % 3] - v[base];
    const LatticePoint q = v[(base + 2) % 3] - v[base];
    for (int g = 0; g < 8; ++g) {
      LatticePoint a = apply_symmetry(g, p);
      LatticePoint b = apply_symmetry(g, q);
      if (cross(a, b).sign() < 0) std::swap(a, b);
      Coords c{a.x, a.y, b.x, b.y};
      if (!best || c < *best) best = c;
    }
  }
  return Triangle::at_origin({(*best)[0], (*best)[1]}, {(*best)[2], (*best)[3]});
}

WitnessKey witness_key(const Triangle& t) {
  const LatticePoint u = t.side1();
  const LatticePoint w = t.side2();
  Integer m = std::max({abs(u.x), abs(u.y), abs(w.x), abs(w.y)});
  return {m, {u.x, u.y, w.x, w.y}};
}

void MinWitness::offer(const Triangle& t) {
  WitnessKey k = witness_key(t);
  if (!key_ || k < *key_) {
    key_ = k;
    best_ = t;
  }
}

void MinWitness::merge(const MinWitness& other) {
  if (other.best_) offer(*other.best_);
}

namespace detail {

std::array<std::int64_t, 4> coords_of(const Triangle& origin_based) {
  return {origin_based.v1().x.to_int64(), origin_based.v1().y.to_int64(),
          origin_based.v2().x.to_int64(), origin_based.v2().y.to_int64()};
}

Triangle from_coords(const std::array<std::int64_t, 4>& c) {
  return Triangle::at_origin({c[0], c[1]}, {c[2], c[3]});
}

}  // namespace detail

std::vector<Triangle> orbit_representatives(const EnumSpec& spec, unsigned threads) {
  validate(spec);
  const std::size_t n = chunk_count(spec);
  std::vector<detail::CoordSet> sets(n);
  detail::run_indexed(n, threads, [&](std::size_t c) {
    for_each_in_chunk(spec, c, [&](const Triangle& t) {
      sets[c].insert(detail::coords_of(canonical_form(t)));
    });
  });
  detail::CoordSet all;
  for (auto& s : sets) {
    all.merge(s);
  }
  std::vector<Triangle> reps;
  reps.reserve(all.size());
  for (const auto& c : all) reps.push_back(detail::from_coords(c));
  std::sort(reps.begin(), reps.end(), [](const Triangle& a, const Triangle& b) {
    return witness_key(a) < witness_key(b);
  });
  return reps;
}

}  // namespace lattice
