#include "riesz/parallel.hpp"

#include <atomic>
#include <omp.h>

namespace riesz {

namespace {
std::atomic<int> g_workers{0};  // 0 = OpenMP default
}

int worker_count() {
  int w = g_workers.load(std::memory_order_relaxed);
  if (w > 0) return w;
  return omp_get_max_threads();
}

void set_worker_count(int n) {
  g_workers.store(n > 0 ? n : 0, std::memory_order_relaxed);
}

}  // namespace riesz
