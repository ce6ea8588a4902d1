#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace traverse {

/// Worker count: the override if set, else TRAVERSE_THREADS, else hardware concurrency.
unsigned thread_count();

/// Overrides TRAVERSE_THREADS for the current process; 0 clears the override.
void set_thread_count(unsigned n);

/// Runs body(i) for i in [0, n). Results must be written to per-index slots so
/// that output does not depend on scheduling. The exception thrown for the
/// smallest index, if any, is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace traverse
