#pragma once

#include <functional>

namespace supersplit {

/// Worker cap: SUPERSPLIT_THREADS when set, otherwise hardware concurrency
/// (at most 8).
int thread_limit();

/// Run fn(k) for k in [begin, end). Results must not depend on schedule;
/// with a limit of 1 this degenerates to a plain loop.
void parallel_for(int begin, int end, const std::function<void(int)>& fn);

}  // namespace supersplit
