#pragma once

#include <cstddef>
#include <functional>

namespace saxlkit {

/// Worker count used by batch drivers; defaults to the number of logical cores.
void set_thread_count(unsigned n);
unsigned thread_count();

/// Runs body(i) for i in [0, count). Work is claimed dynamically; the first
/// exception thrown by any body is rethrown after all workers stop.
/// Callers keep results deterministic by writing to slot i only.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace saxlkit
