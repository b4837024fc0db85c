#pragma once

#include <cstdint>

namespace tetra {

// splitmix64 step. Cheap, passes the usual statistical batteries, and being
// counter-based makes every sampling loop reproducible regardless of how the
// work is partitioned across threads.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Mix a seed with a stream id and a counter into one draw. Distinct streams
// of the same seed are independent for practical purposes.
inline std::uint64_t hash_draw(std::uint64_t seed, std::uint64_t stream,
                               std::uint64_t counter) {
  std::uint64_t h = splitmix64(seed ^ (0x632be59bd9b4e019ULL * (stream + 1)));
  return splitmix64(h ^ (0x9e3779b97f4a7c15ULL * (counter + 1)));
}

inline double u64_to_unit(std::uint64_t bits) {
  // 53 high bits to a double in [0, 1).
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Stateful generator for sequential sampling loops.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(splitmix64(seed ^ (0x632be59bd9b4e019ULL * (stream + 1)))) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  double unit() { return u64_to_unit(next_u64()); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  std::uint64_t state_;
};

}  // namespace tetra
