#pragma once

#include <cstddef>
#include <functional>

namespace steiner {

/// Worker count: STEINER_THREADS when set (1..256), hardware concurrency otherwise.
unsigned worker_count();

/// Runs `body(worker, index)` for every index in [0, count), handing indices to
/// workers in increasing order. `worker` is in [0, workers) where workers is the
/// value returned through `used_workers` (may be null); callers use it to index
/// per-worker accumulators that they reduce afterwards.
void parallel_for(std::size_t count, const std::function<void(unsigned, std::size_t)>& body,
                  unsigned* used_workers = nullptr);

/// Number of workers parallel_for will use for `count` items.
unsigned planned_workers(std::size_t count);

}  // namespace steiner
