#pragma once

#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "metriclab/dataset.hpp"
#include "metriclab/metrics.hpp"
#include "metriclab/payload.hpp"
#include "metriclab/pivots.hpp"

namespace metriclab {

struct QueryStats {
  std::uint64_t compdists = 0;
  std::uint64_t page_accesses = 0;
  std::uint64_t elapsed_ns = 0;
  std::uint32_t rounds = 1;  // radius rounds for the incremental strategy
};

// One hit of a range search. Validated objects carry an upper bound on their
// distance instead of the exact value; computing it would defeat validation.
struct SearchHit {
  ObjectId id = kInvalidId;
  double distance = 0.0;
  bool exact = true;
};

// Sorted by (distance, id).
using ResultSet = std::vector<SearchHit>;

void sort_hits(ResultSet& hits);

// Per-query context: owns the distance counter, memoizes query-to-object
// distances so no object is ever evaluated twice, and records which structure
// nodes a traversal touched (input to the simulated page model).
class QuerySession {
 public:
  QuerySession(const Dataset& dataset, const Payload& query)
      : dataset_(&dataset),
        query_(&query),
        metric_(dataset.counted_metric()),
        memo_(dataset.size(), 0.0),
        known_(dataset.size(), 0) {}

  const Dataset& dataset() const { return *dataset_; }
  const Payload& query() const { return *query_; }

  double distance_to(ObjectId id) {
    if (!known_[id]) {
      memo_[id] = metric_(*query_, dataset_->payload(id));
      known_[id] = 1;
    }
    return memo_[id];
  }

  bool knows(ObjectId id) const { return known_[id] != 0; }
  double known_distance(ObjectId id) const { return memo_[id]; }

  // For payloads without a dataset identity (synthetic pivots etc.).
  double distance_to_payload(const Payload& p) { return metric_(*query_, p); }

  // Distance to pivot i, shared with the source object's memo slot.
  double distance_to_pivot(const PivotSet& pivots, std::size_t i) {
    const ObjectId src = pivots.source_ids.empty() ? kInvalidId : pivots.source_ids[i];
    if (src != kInvalidId && src < dataset_->size()) return distance_to(src);
    return distance_to_payload(pivots.payloads[i]);
  }

  void touch(std::uint32_t node) { touched_.push_back(node); }
  const std::vector<std::uint32_t>& touched_nodes() const { return touched_; }

  std::uint64_t compdists() const { return metric_.count(); }

 private:
  const Dataset* dataset_;
  const Payload* query_;
  CountedMetric metric_;
  std::vector<double> memo_;
  std::vector<std::uint8_t> known_;
  std::vector<std::uint32_t> touched_;
};

// Fixed-capacity best list for MkNN; keeps the k smallest (distance, id)
// pairs and exposes the shrinking dynamic radius.
class KnnAccumulator {
 public:
  explicit KnnAccumulator(std::size_t k) : k_(k) {}

  void offer(ObjectId id, double distance) {
    if (heap_.size() < k_) {
      heap_.emplace(distance, id);
    } else if (std::pair<double, ObjectId>(distance, id) < heap_.top()) {
      heap_.pop();
      heap_.emplace(distance, id);
    }
  }

  // current k-th distance, or +inf while the list is not yet full
  double radius() const {
    return heap_.size() < k_ ? std::numeric_limits<double>::infinity() : heap_.top().first;
  }

  bool full() const { return heap_.size() >= k_; }
  std::size_t size() const { return heap_.size(); }

  ResultSet take_sorted();

 private:
  std::size_t k_;
  std::priority_queue<std::pair<double, ObjectId>> heap_;
};

}  // namespace metriclab
