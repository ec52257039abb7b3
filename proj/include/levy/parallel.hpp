#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace levy {

inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Run fn(replicate_index) for indices [0, n). Replicates must seed their own
// RngStream from the index and write only to per-index slots, so the result
// is identical for any job count.
template <class F>
void run_replicates(std::uint64_t n, unsigned jobs, F&& fn) {
  jobs = resolve_jobs(jobs);
  if (jobs <= 1 || n < 2 * jobs) {
    for (std::uint64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  const std::uint64_t chunk = (n + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::uint64_t lo = static_cast<std::uint64_t>(w) * chunk;
    const std::uint64_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([lo, hi, &fn] {
      for (std::uint64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace levy
