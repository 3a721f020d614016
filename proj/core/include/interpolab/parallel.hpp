#pragma once

#include <cstddef>
#include <functional>

namespace interpolab {

int default_thread_count();

// Runs fn(i) for i in [0, n). fn must be a pure function of i writing only
// to its own preallocated output slot, so results are identical for any
// thread count; reductions over the slots are then done in index order by
// the caller. threads == 0 means default_thread_count(), 1 runs inline.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  int threads = 0);

}  // namespace interpolab
