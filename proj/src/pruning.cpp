#include "metriclab/pruning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace metriclab {

void IntervalBox::init_empty(std::size_t l) {
  lo.assign(l, std::numeric_limits<double>::infinity());
  hi.assign(l, -std::numeric_limits<double>::infinity());
}

void IntervalBox::expand(std::span<const double> point) {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] = std::min(lo[i], point[i]);
    hi[i] = std::max(hi[i], point[i]);
  }
}

void IntervalBox::expand(const IntervalBox& other) {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] = std::min(lo[i], other.lo[i]);
    hi[i] = std::max(hi[i], other.hi[i]);
  }
}

bool IntervalBox::contains(std::span<const double> point) const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (point[i] < lo[i] || point[i] > hi[i]) return false;
  return true;
}

MappedPoint pivot_map(const Payload& o, const PivotSet& pivots, const CountedMetric& metric) {
  MappedPoint coords(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) coords[i] = metric(o, pivots.payloads[i]);
  return coords;
}

bool can_prune_by_pivots(std::span<const double> point, std::span<const double> query_coords,
                         double r) {
  if (point.size() != query_coords.size())
    throw std::invalid_argument("can_prune_by_pivots: pivot count mismatch");
  for (std::size_t i = 0; i < point.size(); ++i)
    if (std::abs(point[i] - query_coords[i]) > r) return true;
  return false;
}

bool can_prune_box(const IntervalBox& box, std::span<const double> query_coords, double r) {
  if (box.lo.size() != query_coords.size())
    throw std::invalid_argument("can_prune_box: pivot count mismatch");
  for (std::size_t i = 0; i < box.lo.size(); ++i)
    if (box.hi[i] < query_coords[i] - r || box.lo[i] > query_coords[i] + r) return true;
  return false;
}

std::vector<SplitOutcome> exclusive_filter(double dq_center, double d_med, double rho, double r) {
  std::vector<SplitOutcome> prunable;
  // bps^{r-rho}(c,q) = 0  =>  the far partition is unreachable
  if (dq_center <= d_med - r + rho) prunable.push_back(SplitOutcome::One);
  // bps^{r-rho}(c,q) = 1  =>  the near partition is unreachable
  if (dq_center > d_med + r - rho) prunable.push_back(SplitOutcome::Zero);
  // query ball inside the exclusion shell: both separable partitions drop
  if (r <= rho && d_med - rho + r < dq_center && dq_center <= d_med + rho - r) {
    if (std::find(prunable.begin(), prunable.end(), SplitOutcome::Zero) == prunable.end())
      prunable.push_back(SplitOutcome::Zero);
    if (std::find(prunable.begin(), prunable.end(), SplitOutcome::One) == prunable.end())
      prunable.push_back(SplitOutcome::One);
  }
  return prunable;
}

std::optional<SplitOutcome> exclusive_validate(double dq_center, double d_med, double rho,
                                               double r) {
  if (dq_center <= d_med - rho - r) return SplitOutcome::Zero;
  if (dq_center > d_med + rho + r) return SplitOutcome::One;
  return std::nullopt;
}

std::pair<std::vector<ObjectId>, std::vector<ObjectId>> ball_partition(
    const Dataset& dataset, const Payload& center, double radius, const CountedMetric& metric) {
  if (radius < 0.0) throw std::invalid_argument("ball_partition: radius must be >= 0");
  std::vector<ObjectId> inside, outside;
  for (const auto& rec : dataset.records()) {
    (metric(rec.payload, center) <= radius ? inside : outside).push_back(rec.id);
  }
  return {std::move(inside), std::move(outside)};
}

std::vector<std::vector<ObjectId>> gh_partition(const Dataset& dataset,
                                                std::span<const Payload> centers,
                                                const CountedMetric& metric, double delta) {
  if (centers.empty()) throw std::invalid_argument("gh_partition: centers must be nonempty");
  std::vector<std::vector<ObjectId>> parts(centers.size());
  std::vector<double> d(centers.size());
  for (const auto& rec : dataset.records()) {
    for (std::size_t i = 0; i < centers.size(); ++i) d[i] = metric(rec.payload, centers[i]);
    const double dmin = *std::min_element(d.begin(), d.end());
    std::size_t chosen = 0;
    while (d[chosen] > dmin + delta) ++chosen;
    parts[chosen].push_back(rec.id);
  }
  return parts;
}

std::uint32_t bps_multi(std::span<const SplitOutcome> outcomes) {
  if (outcomes.empty()) throw std::invalid_argument("bps_multi: need at least one outcome");
  const std::uint32_t m = static_cast<std::uint32_t>(outcomes.size());
  std::uint32_t id = 0;
  for (std::uint32_t i = 0; i < m; ++i) {
    if (outcomes[i] == SplitOutcome::Exclusion) return 1u << m;
    id |= static_cast<std::uint32_t>(outcomes[i]) << i;
  }
  return id;
}

double median_of(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median_of: empty input");
  const std::size_t mid = (values.size() - 1) / 2;  // lower median
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  return values[mid];
}

double median_distance(const Dataset& dataset, const Payload& center,
                       const CountedMetric& metric) {
  if (dataset.empty()) throw std::invalid_argument("median_distance: empty dataset");
  std::vector<double> d;
  d.reserve(dataset.size());
  for (const auto& rec : dataset.records()) d.push_back(metric(rec.payload, center));
  return median_of(std::move(d));
}

}  // namespace metriclab
