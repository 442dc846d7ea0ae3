#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace babylon {

/// Global worker cap, 0 = hardware concurrency. Set once by the CLI
/// (--threads); results never depend on the value.
void set_thread_cap(unsigned cap);
unsigned worker_count();

/// Static block partition of [begin, end); fn(chunk_begin, chunk_end) runs
/// on each worker. Chunks are contiguous so callers can merge per-chunk
/// results in index order, keeping output independent of worker count.
void parallel_for_blocks(std::size_t begin, std::size_t end,
                         const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace babylon
