#pragma once

#include <cstdint>
#include <functional>

namespace griddom {

// Process-wide default worker count. 0 restores hardware concurrency.
void setDefaultThreadCount(int n);
int defaultThreadCount();

// Runs fn(i) for every i in [begin, end). With threads <= 0 the process
// default applies. fn must not touch shared mutable state.
void parallelFor(std::int64_t begin, std::int64_t end,
                 const std::function<void(std::int64_t)>& fn, int threads = 0);

}  // namespace griddom
