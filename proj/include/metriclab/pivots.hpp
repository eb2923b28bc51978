#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "metriclab/dataset.hpp"
#include "metriclab/payload.hpp"

namespace metriclab {

// Ordered pivot list; coordinate i of a mapped point always corresponds to
// pivot i. Pivots are payload copies; source_ids track the dataset objects
// they were drawn from so query-time distances can be shared with them.
struct PivotSet {
  std::vector<Payload> payloads;
  std::vector<ObjectId> source_ids;

  std::size_t size() const { return payloads.size(); }
};

// One chosen pivot per object per group, with the pre-computed distance.
struct PivotGroupTable {
  std::uint32_t groups = 0;          // l
  std::uint32_t group_size = 0;      // g (1 for per-object selection)
  PivotSet pool;                     // all distinct pivots, indexed by slot values
  std::vector<std::uint32_t> slot_pivot;  // n x l, index into pool
  std::vector<double> slot_dist;          // n x l, d(object, chosen pivot)

  std::size_t rows() const { return groups == 0 ? 0 : slot_pivot.size() / groups; }
  std::uint32_t pivot_of(std::size_t row, std::uint32_t slot) const {
    return slot_pivot[row * groups + slot];
  }
  double dist_of(std::size_t row, std::uint32_t slot) const {
    return slot_dist[row * groups + slot];
  }
};

struct CostModelInputs {
  std::uint32_t g = 1;
  std::uint32_t l = 0;
  std::uint64_t n = 0;
  double sigma_x2 = 0.0;  // variance of X = d(p, o)
  double sigma_y2 = 0.0;  // variance of Y = d(p, q)
  double r = 0.0;
};

PivotSet select_random(const Dataset& dataset, std::size_t l, std::uint64_t seed);

// Farthest-first traversal seeded at an outlier: the first pivot is the object
// farthest from a cheap centroid proxy, each next pivot maximizes its minimum
// distance to the pivots chosen so far.
PivotSet select_hf(const Dataset& dataset, std::size_t count,
                   std::uint64_t seed = 0x48462A5Bull);

// Greedy subset of HF candidates maximizing the mean of D_P(x,y)/d(x,y) over
// sampled object pairs.
PivotSet select_hfi(const Dataset& dataset, std::size_t l, std::size_t candidate_count,
                    std::size_t sample_size, std::uint64_t seed);

// Per-object pivot lists: for each object, l distinct candidates chosen
// greedily to maximize the summed lower-bound ratio against a sample.
PivotGroupTable select_psa(const Dataset& dataset, std::size_t l, std::size_t cp_scale,
                           std::size_t sample_size, std::uint64_t seed);

// l groups of g random pivots; each object keeps, per group, the member pivot
// whose distance deviates most from that pivot's mean distance.
PivotGroupTable build_ept_groups(const Dataset& dataset, std::size_t l, std::size_t g,
                                 std::uint64_t seed);

// Model-based cost estimate: g*l + n * (1 - (sx^2+sy^2)/r^2)^l, base clamped
// to [0, 1].
double est_cost_lower_bound(const CostModelInputs& inputs);

// Empirical cost: g*l + mean over sample queries of the number of objects the
// table fails to prune at radius r.
double est_cost_empirical(const Dataset& dataset, const PivotGroupTable& table,
                          std::span<const Payload> sample_queries, double r);

// max_i |d(x,p_i) - d(y,p_i)|: the pivot-space lower bound on d(x,y).
double pivot_lower_bound(std::span<const double> x_coords, std::span<const double> y_coords);

}  // namespace metriclab
