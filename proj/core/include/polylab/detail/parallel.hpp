#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace polylab {

/// Runs fn(i) for i in [0, trials), each of `workers` threads taking one
/// contiguous block of indices. The first exception thrown is rethrown.
template <class Fn>
void parallel_trials(std::uint64_t trials, unsigned workers, Fn&& fn) {
  const unsigned w = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, workers), std::max<std::uint64_t>(1, trials)));
  if (w <= 1) {
    for (std::uint64_t i = 0; i < trials; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (unsigned t = 0; t < w; ++t) {
    const std::uint64_t begin = trials * t / w;
    const std::uint64_t end = trials * (t + 1) / w;
    pool.emplace_back([&, begin, end] {
      try {
        for (std::uint64_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace polylab
