#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace level1 {

/// Hardware concurrency, capped by LEVEL1KIT_THREADS when set (>= 1).
inline std::size_t worker_count() {
  std::size_t n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("LEVEL1KIT_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min(n, static_cast<std::size_t>(cap));
    } catch (...) {
    }
  }
  return n;
}

/// Runs body(begin, end) over contiguous chunks of [0, count). Chunk k always
/// covers the same range, so callers can merge per-chunk results in order.
template <class Body>
void parallel_chunks(std::size_t count, std::size_t chunks, Body&& body) {
  const std::size_t workers = std::min(worker_count(), chunks);
  auto range = [&](std::size_t k) {
    return std::pair{count * k / chunks, count * (k + 1) / chunks};
  };
  if (workers <= 1) {
    for (std::size_t k = 0; k < chunks; ++k) {
      auto [b, e] = range(k);
      body(k, b, e);
    }
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < chunks; k += workers) {
        auto [b, e] = range(k);
        body(k, b, e);
      }
    });
  }
  for (auto& t : pool) t.join();
}

/// Indices i in [0, count) with pred(i), in increasing order.
template <class Pred>
std::vector<std::size_t> parallel_filter(std::size_t count, Pred&& pred) {
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(64, count / 1024 + 1));
  std::vector<std::vector<std::size_t>> parts(chunks);
  parallel_chunks(count, chunks, [&](std::size_t k, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i)
      if (pred(i)) parts[k].push_back(i);
  });
  std::vector<std::size_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace level1
