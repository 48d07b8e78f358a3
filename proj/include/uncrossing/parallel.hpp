#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace uncrossing {

/// Runs body(index) for index in [0, count) on `workers` threads. Callers
/// write results into per-index slots and merge them in index order, which
/// keeps output independent of the worker count.
template <class Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
  workers = std::max(1U, workers);
  if (workers == 1 || count < 2) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < count; k += workers) body(k);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace uncrossing
