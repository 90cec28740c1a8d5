#pragma once

#include <cstddef>
#include <functional>

namespace localcop {

/// Worker count used when a caller passes 0: the hardware concurrency, or 1
/// if that is unknown.
unsigned default_thread_count();

/// Calls body(i) for i in [0, count) on up to `threads` workers (0 means
/// default_thread_count()). Items are claimed in index order; callers write
/// results into per-index slots so the outcome does not depend on
/// scheduling. The first exception thrown by any body is rethrown after all
/// workers have stopped.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace localcop
