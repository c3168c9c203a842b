#pragma once

#include <cstddef>
#include <functional>

namespace tpsurf {

// Runs body(i) for i in [0, n) on up to `threads` workers (0: hardware
// concurrency, 1: inline). The first exception thrown by any call is rethrown.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace tpsurf
