#include "metriclab/indexes/laesa.hpp"

#include <cmath>

#include "metriclab/indexes/detail.hpp"
#include "metriclab/pruning.hpp"

namespace metriclab {

LaesaIndex::LaesaIndex(const Dataset& dataset, PivotSet pivots, CountedMetric& metric)
    : rows_(dataset.size()), pivots_(std::move(pivots)) {
  if (dataset.empty()) throw std::invalid_argument("laesa: dataset must be nonempty");
  if (pivots_.size() == 0) throw std::invalid_argument("laesa: need at least one pivot");
  const std::size_t l = pivots_.size();
  table_.resize(rows_ * l);
  for (std::size_t row = 0; row < rows_; ++row)
    for (std::size_t i = 0; i < l; ++i)
      table_[row * l + i] = metric(dataset.payload(static_cast<ObjectId>(row)),
                                   pivots_.payloads[i]);
}

void LaesaIndex::range_search(QuerySession& qs, double r, ResultSet& out) const {
  const std::size_t l = pivots_.size();
  std::vector<double> qc(l);
  for (std::size_t i = 0; i < l; ++i) qc[i] = qs.distance_to_pivot(pivots_, i);
  for (std::size_t row = 0; row < rows_; ++row) {
    const double* coords = &table_[row * l];
    const ObjectId id = static_cast<ObjectId>(row);
    bool pruned = false, validated = false;
    double bound = 0.0;
    for (std::size_t i = 0; i < l; ++i) {
      if (std::abs(coords[i] - qc[i]) > r) {
        pruned = true;
        break;
      }
      if (!validated && can_validate_by_pivot(coords[i], qc[i], r)) {
        validated = true;
        bound = qc[i] + coords[i];
      }
    }
    if (pruned) continue;
    if (validated && !qs.knows(id)) {
      out.push_back(SearchHit{id, bound, false});
    } else {
      const double d = qs.distance_to(id);
      if (d <= r) out.push_back(SearchHit{id, d, true});
    }
  }
}

void LaesaIndex::knn_search(QuerySession& qs, KnnAccumulator& acc, bool seed_only) const {
  const std::size_t l = pivots_.size();
  std::vector<double> qc(l);
  for (std::size_t i = 0; i < l; ++i) qc[i] = qs.distance_to_pivot(pivots_, i);

  if (seed_only) {
    // greedy candidate pass: verify rows in ascending pivot-space lower bound
    std::vector<std::pair<double, ObjectId>> order(rows_);
    for (std::size_t row = 0; row < rows_; ++row)
      order[row] = {pivot_lower_bound({&table_[row * l], l}, qc),
                    static_cast<ObjectId>(row)};
    std::sort(order.begin(), order.end());
    for (const auto& [lb, id] : order) {
      if (acc.full()) break;
      acc.offer(id, qs.distance_to(id));
    }
    return;
  }

  for (std::size_t row = 0; row < rows_; ++row) {
    const ObjectId id = static_cast<ObjectId>(row);
    const double lb = pivot_lower_bound({&table_[row * l], l}, qc);
    if (lb > acc.radius()) continue;
    acc.offer(id, qs.distance_to(id));
  }
}

void LaesaIndex::audit(const Dataset& dataset) const {
  detail::check(rows_ == dataset.size(), "laesa", "row count");
  CountedMetric metric = dataset.counted_metric();
  const std::size_t l = pivots_.size();
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      detail::check(!(pivots_.payloads[i] == pivots_.payloads[j]) ||
                        pivots_.source_ids[i] != pivots_.source_ids[j],
                    "laesa", "duplicate pivot");
  for (std::size_t row = 0; row < rows_; ++row)
    for (std::size_t i = 0; i < l; ++i)
      detail::check(table_[row * l + i] == metric(dataset.payload(static_cast<ObjectId>(row)),
                                                  pivots_.payloads[i]),
                    "laesa", "stored distance mismatch");
  std::vector<ObjectId> ids(rows_);
  std::iota(ids.begin(), ids.end(), 0u);
  detail::require_ids_exactly_once(ids, dataset.size(), "laesa");
}

void LaesaIndex::save(BinaryWriter& w) const {
  w.u64(rows_);
  w.u64(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) w.u32(pivots_.source_ids[i]);
  w.f64_vec(table_);
}

std::unique_ptr<LaesaIndex> LaesaIndex::load(BinaryReader& r) {
  auto idx = std::unique_ptr<LaesaIndex>(new LaesaIndex());
  idx->rows_ = r.u64();
  const std::uint64_t l = r.u64();
  idx->pivots_.source_ids.resize(l);
  for (auto& id : idx->pivots_.source_ids) id = r.u32();
  idx->table_ = r.f64_vec();
  return idx;
}

}  // namespace metriclab
