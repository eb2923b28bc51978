#pragma once

#include "metriclab/index.hpp"

namespace metriclab {

// Pivot table: d(o, p_i) for every object and every pivot. Search scans the
// table, pruning with the pivot bounds and validating answers whose bound
// already places them inside the query ball.
class LaesaIndex : public IndexBase {
 public:
  LaesaIndex(const Dataset& dataset, PivotSet pivots, CountedMetric& metric);

  IndexKind kind() const override { return IndexKind::Laesa; }
  void range_search(QuerySession& qs, double r, ResultSet& out) const override;
  void knn_search(QuerySession& qs, KnnAccumulator& acc, bool seed_only) const override;
  void audit(const Dataset& dataset) const override;
  void save(BinaryWriter& w) const override;
  static std::unique_ptr<LaesaIndex> load(BinaryReader& r);

  const PivotSet& pivots() const { return pivots_; }
  const std::vector<double>& table() const { return table_; }

 private:
  LaesaIndex() = default;
  std::size_t rows_ = 0;
  PivotSet pivots_;
  std::vector<double> table_;  // rows_ x l, row index == object id
};

}  // namespace metriclab
