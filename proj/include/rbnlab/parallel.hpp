#pragma once

#include <cstdint>
#include <functional>

namespace rbnlab {

/// Worker count: RBNLAB_THREADS when set (clamped to >= 1), otherwise the
/// hardware concurrency.
int worker_count();

/// Runs body(i) for i in [0, n) on up to `threads` workers with static block
/// partitioning. Nested calls run serially on the caller's thread. The first
/// exception thrown by a body is rethrown after all workers join.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body,
                  int threads = 0);

}  // namespace rbnlab
