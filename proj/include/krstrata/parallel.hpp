#pragma once

#include <cstddef>
#include <functional>

namespace krstrata {

/// Worker count used by the enumeration routines; defaults to 1.
void set_thread_count(unsigned count);
unsigned thread_count();

/// Runs body(i) for i in [0, count) across the configured workers. The body
/// must only write to per-index storage.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace krstrata
