#pragma once

#include <cstddef>
#include <functional>

namespace gsatlas {

// Runs fn(i) for every i in [0, count), on up to `jobs` worker threads.
// Iteration order is unspecified; callers must merge results in a
// schedule-independent way (sort, min/max, set union).
void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn);

int default_jobs();

}  // namespace gsatlas
