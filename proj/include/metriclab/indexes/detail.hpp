#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "metriclab/payload.hpp"

namespace metriclab::detail {

// Every object id must be stored exactly once across the structure.
inline void require_ids_exactly_once(std::vector<ObjectId> collected, std::size_t n,
                                     const char* index_name) {
  std::sort(collected.begin(), collected.end());
  if (collected.size() != n)
    throw std::logic_error(std::string(index_name) + ": stored object count mismatch");
  for (std::size_t i = 0; i < n; ++i)
    if (collected[i] != static_cast<ObjectId>(i))
      throw std::logic_error(std::string(index_name) + ": object ids not stored exactly once");
}

inline void check(bool ok, const char* index_name, const char* what) {
  if (!ok) throw std::logic_error(std::string(index_name) + ": " + what);
}

// Lower bound on d(q, o) for o with d(o, p) in [lo, hi], given dq = d(q, p).
inline double interval_lower_bound(double dq, double lo, double hi) {
  if (dq < lo) return lo - dq;
  if (dq > hi) return dq - hi;
  return 0.0;
}

}  // namespace metriclab::detail
