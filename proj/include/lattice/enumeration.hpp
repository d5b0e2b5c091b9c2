#pragma once

/**
 * \file
 * Exhaustive streaming of origin-based lattice triangles O, v1, v2 with
 * v1, v2 in [-B, B]^2 and cross(v1, v2) > 0.
 *
 * The outer loop over the x-coordinate of v1 is split into independent
 * chunks; `parallel_reduce` hands chunks to worker threads and merges the
 * per-chunk accumulators in chunk order, so results never depend on the
 * thread count.
 */

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <unordered_set>
#include <vector>

#include "lattice/triangle_centers.hpp"

namespace lattice {

struct EnumSpec {
  std::int64_t bound = 1;
  bool primitive_only = false;
  bool dedupe = false;
};

/// Throws std::invalid_argument unless bound >= 1 (and small enough to enumerate).
void validate(const EnumSpec& spec);

/// Lexicographically smallest (x1, y1, x2, y2) over every choice of base vertex,
/// the 8 lattice symmetries and the positively oriented labeling.
Triangle canonical_form(const Triangle& t);

/// Order used to pick reproducible witnesses: smallest max |coordinate| first,
/// then lexicographic on (x1, y1, x2, y2) of the origin-based triangle.
struct WitnessKey {
  Integer max_abs;
  std::array<Integer, 4> coords;
  friend auto operator<=>(const WitnessKey&, const WitnessKey&) = default;
};
WitnessKey witness_key(const Triangle& t);

/// Keeps the minimal triangle under WitnessKey order.
class MinWitness {
 public:
  void offer(const Triangle& t);
  void merge(const MinWitness& other);
  const std::optional<Triangle>& get() const { return best_; }

 private:
  std::optional<Triangle> best_;
  std::optional<WitnessKey> key_;
};

std::size_t chunk_count(const EnumSpec& spec);

namespace detail {

template <typename Sink>
bool emit(Sink& sink, const Triangle& t) {
  if constexpr (std::is_same_v<std::invoke_result_t<Sink&, const Triangle&>, bool>) {
    return sink(t);
  } else {
    sink(t);
    return true;
  }
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct CoordsHash {
  std::size_t operator()(const std::array<std::int64_t, 4>& c) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::int64_t v : c) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

using CoordSet = std::unordered_set<std::array<std::int64_t, 4>, CoordsHash>;

std::array<std::int64_t, 4> coords_of(const Triangle& origin_based);
Triangle from_coords(const std::array<std::int64_t, 4>& c);

}  // namespace detail

/// Streams every triangle of one chunk (one value of v1.x) without dedupe.
/// The sink may return false to stop; the function then returns false.
template <typename Sink>
bool for_each_in_chunk(const EnumSpec& spec, std::size_t chunk, Sink&& sink) {
  const std::int64_t b = spec.bound;
  const std::int64_t x1 = static_cast<std::int64_t>(chunk) - b;
  for (std::int64_t y1 = -b; y1 <= b; ++y1) {
    if (x1 == 0 && y1 == 0) continue;
    const std::int64_t g1 = spec.primitive_only ? detail::gcd64(x1, y1) : 0;
    for (std::int64_t x2 = -b; x2 <= b; ++x2) {
      for (std::int64_t y2 = -b; y2 <= b; ++y2) {
        if (x1 * y2 - y1 * x2 <= 0) continue;
        if (spec.primitive_only && detail::gcd64(detail::gcd64(g1, x2), y2) != 1) continue;
        if (!detail::emit(sink, Triangle::at_origin({x1, y1}, {x2, y2}))) return false;
      }
    }
  }
  return true;
}

/// Streams the whole enumeration. With dedupe, yields canonical_form of each
/// orbit the first time the orbit is met, and nothing else.
template <typename Sink>
void enumerate(const EnumSpec& spec, Sink&& sink) {
  validate(spec);
  const std::size_t chunks = chunk_count(spec);
  if (!spec.dedupe) {
    for (std::size_t c = 0; c < chunks; ++c) {
      if (!for_each_in_chunk(spec, c, sink)) return;
    }
    return;
  }
  detail::CoordSet seen;
  for (std::size_t c = 0; c < chunks; ++c) {
    bool go = for_each_in_chunk(spec, c, [&](const Triangle& t) {
      Triangle rep = canonical_form(t);
      if (!seen.insert(detail::coords_of(rep)).second) return true;
      return detail::emit(sink, rep);
    });
    if (!go) return;
  }
}

/// Canonical representatives of every orbit meeting the box, sorted by WitnessKey.
std::vector<Triangle> orbit_representatives(const EnumSpec& spec, unsigned threads = 1);

namespace detail {

// Runs task(i) for i in [0, n) on up to `threads` workers; rethrows the first failure.
template <typename Task>
void run_indexed(std::size_t n, unsigned threads, Task&& task) {
  threads = std::max(1u, threads);
  if (threads == 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  pool.reserve(count);
  for (unsigned k = 0; k < count; ++k) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

/// Folds `visit(acc, triangle)` over the enumeration. Each work unit starts
/// from a copy of `init`; partial results are merged with `combine(into, part)`
/// in work-unit order.
template <typename Acc, typename Visit, typename Combine>
Acc parallel_reduce(const EnumSpec& spec, unsigned threads, Acc init, Visit visit, Combine combine) {
  validate(spec);
  std::vector<std::optional<Acc>> parts;
  if (!spec.dedupe) {
    const std::size_t n = chunk_count(spec);
    parts.resize(n);
    detail::run_indexed(n, threads, [&](std::size_t c) {
      Acc acc = init;
      for_each_in_chunk(spec, c, [&](const Triangle& t) { visit(acc, t); });
      parts[c].emplace(std::move(acc));
    });
  } else {
    const std::vector<Triangle> reps = orbit_representatives(spec, threads);
    const std::size_t slice = 4096;
    const std::size_t n = (reps.size() + slice - 1) / slice;
    parts.resize(n);
    detail::run_indexed(n, threads, [&](std::size_t s) {
      Acc acc = init;
      const std::size_t end = std::min(reps.size(), (s + 1) * slice);
      for (std::size_t i = s * slice; i < end; ++i) visit(acc, reps[i]);
      parts[s].emplace(std::move(acc));
    });
  }
  for (auto& part : parts) combine(init, std::move(*part));
  return init;
}

}  // namespace lattice
