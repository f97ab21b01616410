#pragma once

#include <cstddef>
#include <functional>

namespace fsel {

/// Number of workers for a requested thread count (0 = hardware concurrency).
int effective_threads(int requested);

/// Runs body(0), ..., body(n-1) on up to `threads` workers. Tasks must be
/// independent and write only to their own slots; under that contract the
/// result is identical to the sequential loop for any thread count.
/// The first exception thrown by a task is rethrown after all workers join.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace fsel
