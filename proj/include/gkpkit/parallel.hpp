// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT
//
// Minimal deterministic work-sharing loop.  The worker count comes from the
// GKPKIT_THREADS environment variable when set to a positive integer and
// falls back to the hardware concurrency otherwise.  Each index in
// [0, count) is processed exactly once and callers key all output by index,
// so results are bitwise independent of the thread count and of scheduling.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gkpkit::detail {

/// Worker count for parallel_for: GKPKIT_THREADS when it parses as an
/// integer in [1, 4096], otherwise std::thread::hardware_concurrency()
/// (treated as 1 when the runtime reports zero).
inline int thread_count() {
  if (const char* env = std::getenv("GKPKIT_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 1 && parsed <= 4096)
      return static_cast<int>(parsed);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Invokes body(i) once for every i in [0, count), sharing the indices over
/// thread_count() workers.  The first exception thrown by any invocation
/// stops the remaining work and is rethrown on the calling thread.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
  const std::size_t workers =
      std::min(count, static_cast<std::size_t>(thread_count()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex gate;
  std::exception_ptr first_failure;

  const auto run = [&] {
    for (;;) {
      if (failed.load(std::memory_order_relaxed)) return;
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(gate);
        if (!first_failure) first_failure = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (std::thread& worker : pool) worker.join();
  if (first_failure) std::rethrow_exception(first_failure);
}

}  // namespace gkpkit::detail
