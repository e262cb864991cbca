#pragma once

#include <cstddef>
#include <functional>

namespace mpa {

/// Worker count: set_worker_count, else MPA_THREADS, else hardware concurrency.
unsigned worker_count();
/// 0 restores the default.
void set_worker_count(unsigned count);

/// Calls body(i) for i in [0, count), striped over worker_count() threads.
/// The first exception thrown by any worker is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace mpa
