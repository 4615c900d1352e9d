#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace teichlab {

/// Runs body(begin, end) over disjoint chunks of [0, n) on up to
/// hardware_concurrency threads. Callers must make per-chunk results
/// independent of execution order (write into index-addressed slots,
/// reduce afterwards).
inline void parallel_chunks(std::size_t n,
                            const std::function<void(std::size_t, std::size_t)>& body) {
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t workers = std::max<std::size_t>(1, hw);
  workers = std::min(workers, n == 0 ? 1 : n);
  if (workers <= 1 || n < 2) {
    body(0, n);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace teichlab
