#pragma once

#include <cstddef>
#include <functional>

namespace hdet {

/// Worker count: HDET_THREADS if set to a positive integer, else the machine's
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Runs task(i) for every i in [0, count) on up to worker_count() threads.
/// Tasks must write only to storage owned by their index; callers merge in
/// index order, so results do not depend on scheduling. The first exception
/// thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

}  // namespace hdet
