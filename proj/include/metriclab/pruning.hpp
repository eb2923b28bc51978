#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "metriclab/dataset.hpp"
#include "metriclab/metrics.hpp"
#include "metriclab/pivots.hpp"

namespace metriclab {

// phi(o): distances from an object to each pivot, in pivot order.
using MappedPoint = std::vector<double>;

// Per-pivot [lo, hi] distance intervals bounding a set of mapped points.
struct IntervalBox {
  std::vector<double> lo, hi;

  void init_empty(std::size_t l);
  void expand(std::span<const double> point);
  void expand(const IntervalBox& other);
  bool contains(std::span<const double> point) const;
};

struct BallRegion {
  ObjectId center = kInvalidId;
  double radius = 0.0;
};

// Three-way outcome of a rho-split: inside the shrunken ball, outside the
// grown ball, or in the exclusion shell between them.
enum class SplitOutcome : std::uint8_t { Zero = 0, One = 1, Exclusion = 2 };

MappedPoint pivot_map(const Payload& o, const PivotSet& pivots, const CountedMetric& metric);

// Pivot filtering: some coordinate of phi(o) falls outside [q_i - r, q_i + r].
bool can_prune_by_pivots(std::span<const double> point, std::span<const double> query_coords,
                         double r);
// Box form: some pivot interval is disjoint from the query interval.
bool can_prune_box(const IntervalBox& box, std::span<const double> query_coords, double r);

// Range-pivot filtering: the query ball cannot reach the region ball.
inline bool can_prune_ball(double dq_center, double ball_radius, double r) {
  return dq_center > ball_radius + r;
}

// Double-pivot filtering: prunes the side of pivot i.
inline bool can_prune_hyperplane(double dq_pi, double dq_pj, double r) {
  return dq_pi - dq_pj > 2.0 * r;
}

// Exclusive filtering over a rho-split: which of the two separable partitions
// can be discarded. Follows the proof inequalities; boundary ties never prune.
std::vector<SplitOutcome> exclusive_filter(double dq_center, double d_med, double rho, double r);

// Pivot validation: o is an answer without computing d(q, o).
inline bool can_validate_by_pivot(double d_o_pi, double dq_pi, double r) {
  return d_o_pi <= r - dq_pi;
}

// Range-pivot validation: the whole ball lies inside the query ball.
inline bool can_validate_ball(double dq_center, double ball_radius, double r) {
  return dq_center <= r - ball_radius;
}

// Exclusive validation: the complete result is confined to one partition.
std::optional<SplitOutcome> exclusive_validate(double dq_center, double d_med, double rho,
                                               double r);

std::pair<std::vector<ObjectId>, std::vector<ObjectId>> ball_partition(
    const Dataset& dataset, const Payload& center, double radius, const CountedMetric& metric);

// Assigns every object to its nearest center (lowest index wins ties); with
// delta > 0, to the lowest-index center admissible under the relaxed rule.
std::vector<std::vector<ObjectId>> gh_partition(const Dataset& dataset,
                                                std::span<const Payload> centers,
                                                const CountedMetric& metric, double delta = 0.0);

inline SplitOutcome bps_split(double d_c_o, double d_med, double rho) {
  if (d_c_o <= d_med - rho) return SplitOutcome::Zero;
  if (d_c_o > d_med + rho) return SplitOutcome::One;
  return SplitOutcome::Exclusion;
}

// Combines m single-center outcomes into a partition id in [0, 2^m]; any
// exclusion maps to the final partition 2^m.
std::uint32_t bps_multi(std::span<const SplitOutcome> outcomes);

// Lower median of the distances from every object to the center.
double median_distance(const Dataset& dataset, const Payload& center,
                       const CountedMetric& metric);
double median_of(std::vector<double> values);

}  // namespace metriclab
