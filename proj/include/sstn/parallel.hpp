#ifndef SSTN_PARALLEL_HPP
#define SSTN_PARALLEL_HPP

#include <functional>

#include "sstn/types.hpp"

namespace sstn {

/// Runs fn(i) for every i in [0, count) across up to `threads` workers
/// (0 means hardware concurrency).  Tasks must derive any randomness from
/// their index so results do not depend on scheduling.  The first exception
/// thrown by a task is rethrown after all workers finish.
void parallel_for(Index count, const std::function<void(Index)>& fn, int threads = 0);

}  // namespace sstn

#endif
