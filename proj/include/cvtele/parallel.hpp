#pragma once

#include <cstddef>
#include <functional>

namespace cvtele {

/// Environment variable capping worker threads (positive integer).
inline constexpr const char* kThreadsEnvVar = "CVTELE_THREADS";

/// Worker count: CVTELE_THREADS if set and valid, else hardware concurrency.
std::size_t worker_count();

/// Calls body(i) for i in [0, n), striped over worker_count() threads.
/// Each index is visited exactly once; callers write results into per-index
/// slots, so output order never depends on scheduling. The first exception
/// thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cvtele
