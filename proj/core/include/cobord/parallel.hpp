#pragma once

#include <cstddef>
#include <functional>

namespace cobord {

/// Worker count used by parallel loops. Defaults to 1 (fully sequential).
unsigned thread_count();
/// Sets the worker count; 0 selects std::thread::hardware_concurrency().
void set_thread_count(unsigned n);

/// Runs body(begin, end, worker) over contiguous chunks of [0, count).
/// Chunk boundaries depend only on count and the worker count, so results
/// assembled by index are identical regardless of scheduling.
void parallel_for_chunks(std::size_t count,
                         const std::function<void(std::size_t, std::size_t, unsigned)>& body);

}  // namespace cobord
