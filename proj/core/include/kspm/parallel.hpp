#pragma once

#include <cstddef>
#include <functional>

namespace kspm {

/// Worker count: KSPM_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs task(0..count-1) on up to worker_count() threads. Tasks must not
/// share mutable state; the first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

}  // namespace kspm
