#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dforge {

// Worker count from DIOPHANTINE_FORGE_THREADS (0 or unset: hardware concurrency).
unsigned configured_threads();

// Runs fn(begin, end) over `chunks` contiguous pieces of [0, total) and
// returns the per-chunk results in chunk order. The first exception thrown
// by any worker is rethrown after all workers finish.
template <class Result, class Fn>
std::vector<Result> parallel_chunks(std::uint64_t total, unsigned threads, Fn fn) {
  if (threads == 0) threads = configured_threads();
  std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total));
  std::vector<Result> results(chunks);
  auto bounds = [&](std::uint64_t k) { return total / chunks * k + std::min(k, total % chunks); };
  if (chunks == 1) {
    results[0] = fn(std::uint64_t{0}, total);
    return results;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::uint64_t k = 0; k < chunks; ++k) {
    pool.emplace_back([&, k] {
      try {
        results[k] = fn(bounds(k), bounds(k + 1));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace dforge
