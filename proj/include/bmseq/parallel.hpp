#pragma once

#include <cstddef>
#include <functional>

namespace bmseq {

// Runs fn(i) for every i in [0, n), split into contiguous chunks across
// `threads` worker threads. fn must be safe to call concurrently for
// distinct i. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace bmseq
