#pragma once

#include <functional>

namespace staircase {

// Worker count: STAIRCASE_THREADS if set and positive, else the OpenMP default.
int thread_count();

enum class Execution { Serial, Parallel };

// Runs body(i) for i in [0, n). The first exception thrown by any iteration is
// rethrown after the loop.
void parallel_for(long n, const std::function<void(long)>& body, Execution mode = Execution::Parallel);

}  // namespace staircase
