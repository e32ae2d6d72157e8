#pragma once

#include <cstddef>
#include <functional>

namespace qhf {

/// Worker count: QHF_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Runs body(i) for i in [0, count), split into contiguous chunks over
/// thread_count() threads. Each index is processed by exactly one thread, so
/// results do not depend on the schedule as long as body(i) only writes state
/// owned by i.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  std::size_t min_chunk = 16);

}  // namespace qhf
