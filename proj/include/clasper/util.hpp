#pragma once

#include <cstddef>
#include <functional>

namespace clasper {

// Worker cap: CLASPER_THREADS when set, otherwise the hardware concurrency.
std::size_t worker_count();

// Runs fn(begin, end) over contiguous chunks of [0, n), possibly in
// parallel. Chunks are disjoint, so writes to per-index slots stay
// deterministic; the first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace clasper
