#pragma once

#include <cstddef>
#include <functional>

namespace viscorod {

/// Worker count used by parallel loops: the VISCOROD_THREADS environment
/// variable when set (>= 1), otherwise the hardware concurrency.
int default_thread_count();

/// Runs fn(i) for i in [0, n) across `threads` workers (0 = default count).
/// Indices are partitioned in contiguous blocks; results written per index
/// are identical for any worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int threads = 0);

}  // namespace viscorod
