#pragma once

#include <cstddef>
#include <functional>

namespace polyflow {

/// Worker count from POLYFLOW_THREADS (default 1, clamped to [1, 256]).
std::size_t thread_count();

/// Calls body(i) for i in [0, count) on up to `threads` workers. Each index is
/// visited exactly once; callers write to disjoint slots, so results do not
/// depend on scheduling. The first exception thrown by a worker is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  std::size_t threads = thread_count());

}  // namespace polyflow
