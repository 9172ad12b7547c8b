#pragma once

#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace infoimb::detail {

inline unsigned worker_count() {
  if (const char* env = std::getenv("INFOIMB_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return unsigned(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Run fn(i) for i in [0, count). Work items must be independent; results
/// must be written to per-index slots so the outcome does not depend on the
/// degree of parallelism. The first exception (by lowest index) is rethrown.
inline void parallel_for(std::size_t count,
                         const std::function<void(std::size_t)>& fn) {
  const unsigned workers =
      std::min<std::size_t>(worker_count(), count == 0 ? 1 : count);
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace infoimb::detail
