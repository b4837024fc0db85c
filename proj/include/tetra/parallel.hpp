#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace tetra {

// Worker count for grid sweeps. TETRA_ANGLES_THREADS caps it; 0 or unset
// means use the hardware concurrency.
inline unsigned thread_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const char* env = std::getenv("TETRA_ANGLES_THREADS");
  if (env == nullptr || *env == '\0') return hw;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || v < 0) return hw;
  if (v == 0) return hw;
  return static_cast<unsigned>(v) < hw ? static_cast<unsigned>(v) : hw;
}

// Runs body(i) for i in [0, n). Results must be written to preallocated,
// index-addressed storage so the outcome does not depend on the partition.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
  unsigned workers = thread_count();
  if (workers <= 1 || n < 2 * workers) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = static_cast<std::size_t>(w) * chunk;
    std::size_t hi = lo + chunk < n ? lo + chunk : n;
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace tetra
