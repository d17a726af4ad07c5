#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace slepian {

/// Worker count used by assembly and grid evaluation loops (default 1).
void set_num_threads(int n);
int num_threads();

/// Calls body(i) for i in [0, n), split into contiguous chunks over
/// num_threads() threads. body must only write to state owned by index i.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(num_threads()), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace slepian
