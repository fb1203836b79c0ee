#ifndef MONOIDFORGE_PARALLEL_HPP
#define MONOIDFORGE_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace mf {

/// Worker cap: MONOID_FORGE_THREADS if set (>=1), else hardware concurrency.
int thread_cap();

/// Runs fn(i) for i in [0, count) on up to thread_cap() workers.  Callers
/// write results into preassigned slots, so output order is deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace mf

#endif
