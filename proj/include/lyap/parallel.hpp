#pragma once

#include <cstddef>
#include <functional>

namespace lyap {

// Worker count: hardware concurrency, capped by the LYAP_THREADS environment
// variable when it holds a positive integer.
unsigned worker_count();

// Runs body(i) for i in [0, n) on up to worker_count() threads. Each index is
// executed exactly once; callers write results into per-index slots so the
// outcome does not depend on scheduling. The first exception thrown by any
// body is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace lyap
