#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

// Minimal work-sharing helper: independent indexed tasks distributed over a
// bounded set of worker threads.  Results must be written to per-index
// slots by the callers so that reduction order (and therefore output) is
// deterministic regardless of scheduling.

namespace casimir {

// Worker-thread budget: the CASIMIR_THREADS environment variable when it
// parses to a positive integer (clamped to 256), otherwise the hardware
// concurrency (or 4 when unknown).
inline int thread_budget() {
  if (const char* env = std::getenv("CASIMIR_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && parsed >= 1) {
      return static_cast<int>(std::min(parsed, 256L));
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 4 : static_cast<int>(hw);
}

// Runs fn(i) for every i in [0, n).  Exceptions are collected per index;
// after all workers drain the queue, the lowest-index exception (if any)
// is rethrown, so failure reporting does not depend on scheduling.
template <typename Fn>
void parallel_for(int n, Fn&& fn) {
  if (n <= 0) return;
  const int workers = std::min(thread_budget(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }

  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      while (true) {
        const int i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= n) break;
        try {
          fn(i);
        } catch (...) {
          errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace casimir
