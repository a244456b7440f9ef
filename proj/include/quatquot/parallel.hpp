#pragma once

#include <functional>

namespace qq {

// Worker count: QUATQUOT_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
int worker_count();

// Runs fn(0) ... fn(n-1) across contiguous index chunks.  Callers write to
// disjoint per-index slots, so results are deterministic regardless of the
// worker count.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace qq
