#include "babylon/parallel.hpp"

#include <atomic>

namespace babylon {

namespace {
std::atomic<unsigned> g_thread_cap{0};
}

void set_thread_cap(unsigned cap) { g_thread_cap.store(cap); }

unsigned worker_count() {
  unsigned cap = g_thread_cap.load();
  if (cap != 0) return cap;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for_blocks(std::size_t begin, std::size_t end,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
  if (begin >= end) return;
  std::size_t total = end - begin;
  std::size_t workers = std::min<std::size_t>(worker_count(), total);
  if (workers <= 1) {
    fn(begin, end);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (total + workers - 1) / workers;
  for (std::size_t lo = begin; lo < end; lo += chunk) {
    std::size_t hi = std::min(lo + chunk, end);
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace babylon
