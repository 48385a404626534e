#include "voxel/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace voxel {

size_t effective_threads(size_t requested) {
  size_t hw = std::max<size_t>(1, std::thread::hardware_concurrency());
  size_t cap = hw;
  if (const char* env = std::getenv("LPC_VOXEL_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) cap = size_t(v);
  }
  size_t n = requested == 0 ? hw : requested;
  return std::max<size_t>(1, std::min(n, cap));
}

void parallel_for(size_t n, const std::function<void(size_t)>& fn, size_t requested) {
  size_t workers = std::min(effective_threads(requested), n);
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w) {
    size_t lo = n * w / workers;
    size_t hi = n * (w + 1) / workers;
    pool.emplace_back([lo, hi, &fn] {
      for (size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace voxel
