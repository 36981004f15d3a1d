#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace walshkit {

// Runs body(i) for every i in [0, count), split into contiguous chunks.
// Each index is processed exactly once, so per-index outputs do not depend
// on the thread count.
template <class F>
void parallel_for(std::size_t count, int threads, F body) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] {
      for (std::size_t i = begin; i < end; ++i) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace walshkit
