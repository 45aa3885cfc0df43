#pragma once

#include <functional>

namespace vlt {

/// Number of worker threads: the VLT_THREADS environment variable caps the
/// width, 0 or unset means hardware concurrency.
int thread_width();

/// Runs fn(i) for i in [0, n), split into contiguous blocks across
/// thread_width() workers.  Blocks until all are done.  Iterations must not
/// touch shared mutable state.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace vlt
