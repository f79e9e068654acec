#pragma once

#include <cstddef>
#include <functional>

namespace mkdv {

/// Worker count: MKDV_LAB_THREADS when set and positive, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(i) for i in [begin, end) over contiguous chunks, one per worker.
/// `body` must be safe to call concurrently for distinct i.
void parallel_for(std::ptrdiff_t begin, std::ptrdiff_t end,
                  const std::function<void(std::ptrdiff_t)>& body);

}  // namespace mkdv
