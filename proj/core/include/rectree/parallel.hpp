#pragma once

#include <cstddef>
#include <functional>

namespace rectree {

/// Worker count: RECTREE_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to `threads` workers (0 = worker_count()).
/// Indices are split into contiguous blocks. The first exception thrown by
/// any worker is rethrown on the calling thread after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  unsigned threads = 0);

}  // namespace rectree
