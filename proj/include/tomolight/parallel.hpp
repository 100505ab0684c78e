#pragma once

#include <cstddef>
#include <functional>

namespace tomolight {

/// Upper bound on worker threads for grid evaluation. Defaults to the
/// TOMOLIGHT_THREADS environment variable, else hardware concurrency.
int thread_cap();
void set_thread_cap(int n);

/// Runs body(i) for i in [0, n). Each index is evaluated exactly once and
/// writes only its own outputs, so results do not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace tomolight
