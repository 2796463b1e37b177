#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace unitgroup {

/// Runs body(lo, hi) over a partition of [0, n). Callers write results by
/// index, so the outcome is independent of the worker count.
template <typename Body>
void run_chunked(std::size_t n, unsigned threads, Body&& body) {
  if (threads <= 1 || n < 2048) {
    body(std::size_t{0}, n);
    return;
  }
  const unsigned t = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::vector<std::thread> pool;
  pool.reserve(t);
  const std::size_t chunk = (n + t - 1) / t;
  for (unsigned k = 0; k < t; ++k) {
    const std::size_t lo = k * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace unitgroup
