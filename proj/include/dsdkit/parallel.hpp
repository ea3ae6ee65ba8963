#pragma once

#include <cstddef>
#include <functional>

namespace dsdkit::par {

// Worker count used by parallel_for. Resolution order: set_max_threads()
// if called with a positive value, else the DSDKIT_THREADS environment
// variable, else hardware concurrency.
int max_threads();
void set_max_threads(int n);  // n <= 0 restores automatic resolution

// Runs f(chunk_begin, chunk_end) over a partition of [begin, end) into
// contiguous chunks, one per worker. Callers must only write state that is
// disjoint per index, so results are identical for any thread count.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& f);

}  // namespace dsdkit::par
