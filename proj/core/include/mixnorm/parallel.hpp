#pragma once

#include <cstddef>
#include <functional>

namespace mixnorm {

// Global worker count for line/cell-parallel loops. Outputs are independent
// per index, so results are identical for any worker count.
int worker_count();
void set_worker_count(int n);

// Static contiguous partition of [0, n) across the workers.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace mixnorm
