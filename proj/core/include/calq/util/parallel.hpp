#ifndef CALQ_UTIL_PARALLEL_HPP
#define CALQ_UTIL_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace calq::util {

/// Runs body(i) for i in [0, n). Work items must be independent; results
/// should be written to preallocated per-index slots so the output order
/// never depends on scheduling.
inline void parallel_for(std::size_t n, int threads,
                         const std::function<void(std::size_t)>& body) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const int workers = std::min<std::size_t>(threads, n);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        body(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace calq::util

#endif
