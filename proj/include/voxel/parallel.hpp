// Deterministic fork-join helper. Tasks write disjoint outputs, so results
// are identical for every thread count. LPC_VOXEL_THREADS caps the pool.
#pragma once

#include <cstddef>
#include <functional>

namespace voxel {

// Effective thread count: min(requested, LPC_VOXEL_THREADS, hardware).
// requested = 0 means "no preference" (hardware concurrency).
size_t effective_threads(size_t requested = 0);

// Runs fn(i) for i in [0, n). Splits into contiguous chunks across at most
// effective_threads(requested) threads; runs inline when that is 1.
void parallel_for(size_t n, const std::function<void(size_t)>& fn, size_t requested = 0);

}  // namespace voxel
