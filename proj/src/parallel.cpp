#include "rbnlab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rbnlab {

namespace {
thread_local int parallel_depth = 0;
}

int worker_count() {
  if (const char* env = std::getenv("RBNLAB_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body,
                  int threads) {
  if (n <= 0) return;
  if (threads <= 0) threads = worker_count();
  threads = static_cast<int>(std::min<std::int64_t>(threads, n));
  if (threads == 1 || parallel_depth > 0) {
    ++parallel_depth;
    try {
      for (std::int64_t i = 0; i < n; ++i) body(i);
    } catch (...) {
      --parallel_depth;
      throw;
    }
    --parallel_depth;
    return;
  }

  std::vector<std::thread> workers;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  const std::int64_t chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const std::int64_t lo = t * chunk;
    const std::int64_t hi = std::min<std::int64_t>(lo + chunk, n);
    if (lo >= hi) break;
    workers.emplace_back([&, lo, hi] {
      ++parallel_depth;
      try {
        for (std::int64_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
      --parallel_depth;
    });
  }
  for (std::thread& w : workers) w.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace rbnlab
