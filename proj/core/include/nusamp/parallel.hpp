#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace nusamp {

// Worker count: explicit request, else NUSAMP_THREADS, else hardware
// concurrency. Always at least 1.
unsigned resolve_threads(std::optional<unsigned> requested = std::nullopt);

// Runs body(i) for i in [0, count) using up to `threads` workers with static
// contiguous chunks. body must only write to slot i of its outputs, so the
// result does not depend on the worker count.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace nusamp
