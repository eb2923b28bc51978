#include "metriclab/session.hpp"

#include <algorithm>

namespace metriclab {

void sort_hits(ResultSet& hits) {
  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.id < b.id;
  });
}

ResultSet KnnAccumulator::take_sorted() {
  ResultSet out;
  out.reserve(heap_.size());
  while (!heap_.empty()) {
    out.push_back(SearchHit{heap_.top().second, heap_.top().first, true});
    heap_.pop();
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace metriclab
