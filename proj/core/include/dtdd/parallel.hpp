#pragma once

#include <cstddef>
#include <functional>

namespace dtdd {

/// Worker count: `requested` if positive, else hardware concurrency (at least 1).
unsigned resolve_workers(unsigned requested) noexcept;

/// Runs task(i) for every i in [0, n) on up to `workers` threads (0: all
/// cores). Callers write into slot i and reduce in index order, which keeps
/// results independent of the worker count. The first exception thrown by a
/// task is rethrown after all threads join.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& task);

}  // namespace dtdd
