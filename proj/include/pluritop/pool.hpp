#pragma once

#include <cstddef>
#include <functional>

namespace pluritop {

// Worker count: PLURITOP_THREADS if set (>= 1), else hardware concurrency.
int worker_count();

// Runs body(0..count-1) on a transient worker pool. Exceptions from tasks
// are rethrown (the first one) after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace pluritop
