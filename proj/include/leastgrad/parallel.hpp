#pragma once

#include <cstddef>
#include <functional>

namespace lg {

// Worker count: hardware concurrency, capped by LEASTGRAD_THREADS when set.
int worker_count();

// Runs body(begin, end) over contiguous blocks of [0, count). Each index is
// visited exactly once; callers write only to per-index slots so the result
// does not depend on scheduling.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace lg
