#pragma once

#include <cstdint>
#include <limits>

namespace riesz {

/// Worker-count knob for the OpenMP kernels. All kernels must return
/// bit-identical results for any worker count; the scans pick the witness at
/// the least canonical scan position regardless of schedule.
int worker_count();
void set_worker_count(int n);

/// Deterministic first-witness reduction: every thread offers (position,
/// payload index) pairs; the least position wins.
struct MinPos {
  uint64_t pos = std::numeric_limits<uint64_t>::max();
  bool found() const { return pos != std::numeric_limits<uint64_t>::max(); }
};

}  // namespace riesz
