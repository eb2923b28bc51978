#include "metriclab/pivots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "metriclab/rng.hpp"

namespace metriclab {

double pivot_lower_bound(std::span<const double> x_coords, std::span<const double> y_coords) {
  double lb = 0.0;
  for (std::size_t i = 0; i < x_coords.size(); ++i)
    lb = std::max(lb, std::abs(x_coords[i] - y_coords[i]));
  return lb;
}

PivotSet select_random(const Dataset& dataset, std::size_t l, std::uint64_t seed) {
  if (l < 1) throw std::invalid_argument("select_random: l must be >= 1");
  if (l > dataset.size()) throw std::invalid_argument("select_random: l exceeds cardinality");
  auto ids = sample_ids(dataset.size(), l, seed);
  PivotSet out;
  for (ObjectId id : ids) {
    out.payloads.push_back(dataset.payload(id));
    out.source_ids.push_back(id);
  }
  return out;
}

PivotSet select_hf(const Dataset& dataset, std::size_t count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("select_hf: count must be >= 1");
  const std::size_t n = dataset.size();
  if (count > n) throw std::invalid_argument("select_hf: count exceeds cardinality");
  CountedMetric metric = dataset.counted_metric();

  // anchor: the sampled object with the smallest distance sum to the sample
  const std::size_t probe = std::min<std::size_t>(n, 32);
  auto probe_ids = sample_ids(n, probe, mix_seed(seed, 0xA17C));
  ObjectId anchor = probe_ids[0];
  double best_sum = std::numeric_limits<double>::infinity();
  for (ObjectId cand : probe_ids) {
    double sum = 0.0;
    for (ObjectId other : probe_ids)
      if (other != cand) sum += metric(dataset.payload(cand), dataset.payload(other));
    if (sum < best_sum) {
      best_sum = sum;
      anchor = cand;
    }
  }

  // farthest-first traversal from the anchor; lowest index wins ties
  std::vector<double> min_dist(n);
  for (std::size_t i = 0; i < n; ++i)
    min_dist[i] = metric(dataset.payload(static_cast<ObjectId>(i)), dataset.payload(anchor));

  PivotSet out;
  std::vector<char> chosen(n, 0);
  for (std::size_t step = 0; step < count; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (chosen[i]) continue;
      if (best == n || min_dist[i] > min_dist[best]) best = i;
    }
    chosen[best] = 1;
    out.payloads.push_back(dataset.payload(static_cast<ObjectId>(best)));
    out.source_ids.push_back(static_cast<ObjectId>(best));
    if (step + 1 == count) break;
    for (std::size_t i = 0; i < n; ++i) {
      if (chosen[i]) continue;
      min_dist[i] = std::min(
          min_dist[i], metric(dataset.payload(static_cast<ObjectId>(i)), out.payloads.back()));
    }
  }
  return out;
}

PivotSet select_hfi(const Dataset& dataset, std::size_t l, std::size_t candidate_count,
                    std::size_t sample_size, std::uint64_t seed) {
  if (l < 1 || l > candidate_count || candidate_count > dataset.size())
    throw std::invalid_argument("select_hfi: need 1 <= l <= candidate_count <= n");
  PivotSet candidates = select_hf(dataset, candidate_count, mix_seed(seed, 0xCA2D));
  CountedMetric metric = dataset.counted_metric();

  const std::size_t ns = std::min(std::max<std::size_t>(sample_size, 2), dataset.size());
  auto sids = sample_ids(dataset.size(), ns, mix_seed(seed, 0x5A3B));

  // pairs with nonzero true distance
  struct Pair {
    std::size_t a, b;
    double d;
  };
  std::vector<Pair> pairs;
  for (std::size_t a = 0; a < sids.size(); ++a)
    for (std::size_t b = a + 1; b < sids.size(); ++b) {
      const double d = metric(dataset.payload(sids[a]), dataset.payload(sids[b]));
      if (d > 0.0) pairs.push_back({a, b, d});
    }

  // distances from every sampled object to every candidate
  std::vector<double> cd(sids.size() * candidates.size());
  for (std::size_t s = 0; s < sids.size(); ++s)
    for (std::size_t c = 0; c < candidates.size(); ++c)
      cd[s * candidates.size() + c] = metric(dataset.payload(sids[s]), candidates.payloads[c]);

  PivotSet out;
  std::vector<char> taken(candidates.size(), 0);
  std::vector<double> cur(pairs.size(), 0.0);  // best lower bound so far per pair
  for (std::size_t step = 0; step < l; ++step) {
    std::size_t best = candidates.size();
    double best_obj = -1.0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (taken[c]) continue;
      double obj = 0.0;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        const double lb = std::abs(cd[pairs[p].a * candidates.size() + c] -
                                   cd[pairs[p].b * candidates.size() + c]);
        obj += std::max(cur[p], lb) / pairs[p].d;
      }
      if (obj > best_obj) {
        best_obj = obj;
        best = c;
      }
    }
    taken[best] = 1;
    out.payloads.push_back(candidates.payloads[best]);
    out.source_ids.push_back(candidates.source_ids[best]);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const double lb = std::abs(cd[pairs[p].a * candidates.size() + best] -
                                 cd[pairs[p].b * candidates.size() + best]);
      cur[p] = std::max(cur[p], lb);
    }
  }
  return out;
}

PivotGroupTable select_psa(const Dataset& dataset, std::size_t l, std::size_t cp_scale,
                           std::size_t sample_size, std::uint64_t seed) {
  const std::size_t n = dataset.size();
  if (l < 1 || l > cp_scale || cp_scale > n)
    throw std::invalid_argument("select_psa: need 1 <= l <= cp_scale <= n");
  if (sample_size == 0) throw std::invalid_argument("select_psa: sample must be nonempty");

  PivotGroupTable table;
  table.groups = static_cast<std::uint32_t>(l);
  table.group_size = 1;
  table.pool = select_hf(dataset, cp_scale, mix_seed(seed, 0xCAFE));

  CountedMetric metric = dataset.counted_metric();
  const std::size_t ns = std::min(sample_size, n);
  auto sids = sample_ids(n, ns, mix_seed(seed, 0xBEEF));

  const std::size_t nc = table.pool.size();
  std::vector<double> sc(ns * nc);  // d(sample, candidate)
  for (std::size_t s = 0; s < ns; ++s)
    for (std::size_t c = 0; c < nc; ++c)
      sc[s * nc + c] = metric(dataset.payload(sids[s]), table.pool.payloads[c]);

  table.slot_pivot.assign(n * l, 0);
  table.slot_dist.assign(n * l, 0.0);

  std::vector<double> oc(nc), so(ns), cur(ns);
  std::vector<char> taken(nc);
  for (std::size_t row = 0; row < n; ++row) {
    const Payload& o = dataset.payload(static_cast<ObjectId>(row));
    for (std::size_t c = 0; c < nc; ++c) oc[c] = metric(o, table.pool.payloads[c]);
    for (std::size_t s = 0; s < ns; ++s) so[s] = metric(dataset.payload(sids[s]), o);
    std::fill(cur.begin(), cur.end(), 0.0);
    std::fill(taken.begin(), taken.end(), 0);
    for (std::size_t slot = 0; slot < l; ++slot) {
      std::size_t best = nc;
      double best_obj = -1.0;
      for (std::size_t c = 0; c < nc; ++c) {
        if (taken[c]) continue;
        double obj = 0.0;
        for (std::size_t s = 0; s < ns; ++s) {
          if (so[s] <= 0.0) continue;  // degenerate pair, skipped
          obj += std::max(cur[s], std::abs(sc[s * nc + c] - oc[c])) / so[s];
        }
        if (obj > best_obj) {
          best_obj = obj;
          best = c;
        }
      }
      taken[best] = 1;
      table.slot_pivot[row * l + slot] = static_cast<std::uint32_t>(best);
      table.slot_dist[row * l + slot] = oc[best];
      for (std::size_t s = 0; s < ns; ++s)
        cur[s] = std::max(cur[s], std::abs(sc[s * nc + best] - oc[best]));
    }
  }
  return table;
}

PivotGroupTable build_ept_groups(const Dataset& dataset, std::size_t l, std::size_t g,
                                 std::uint64_t seed) {
  const std::size_t n = dataset.size();
  if (l < 1 || g < 1) throw std::invalid_argument("build_ept_groups: l and g must be >= 1");
  if (g * l > n) throw std::invalid_argument("build_ept_groups: g*l exceeds cardinality");

  PivotGroupTable table;
  table.groups = static_cast<std::uint32_t>(l);
  table.group_size = static_cast<std::uint32_t>(g);
  auto ids = sample_ids(n, g * l, mix_seed(seed, 0xE971));
  for (ObjectId id : ids) {
    table.pool.payloads.push_back(dataset.payload(id));
    table.pool.source_ids.push_back(id);
  }

  CountedMetric metric = dataset.counted_metric();
  const std::size_t np = table.pool.size();
  std::vector<double> dist(n * np);
  std::vector<double> mu(np, 0.0);
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t p = 0; p < np; ++p) {
      const double d = metric(dataset.payload(static_cast<ObjectId>(row)),
                              table.pool.payloads[p]);
      dist[row * np + p] = d;
      mu[p] += d;
    }
  for (auto& m : mu) m /= static_cast<double>(n);

  table.slot_pivot.assign(n * l, 0);
  table.slot_dist.assign(n * l, 0.0);
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t j = 0; j < l; ++j) {
      std::size_t best = j * g;
      double best_dev = -1.0;
      for (std::size_t k = 0; k < g; ++k) {
        const std::size_t p = j * g + k;
        const double dev = std::abs(dist[row * np + p] - mu[p]);
        if (dev > best_dev) {
          best_dev = dev;
          best = p;
        }
      }
      table.slot_pivot[row * l + j] = static_cast<std::uint32_t>(best);
      table.slot_dist[row * l + j] = dist[row * np + best];
    }
  }
  return table;
}

double est_cost_lower_bound(const CostModelInputs& in) {
  if (in.r <= 0.0) throw std::invalid_argument("est_cost_lower_bound: r must be > 0");
  const double base =
      std::clamp(1.0 - (in.sigma_x2 + in.sigma_y2) / (in.r * in.r), 0.0, 1.0);
  return static_cast<double>(in.g) * in.l +
         static_cast<double>(in.n) * std::pow(base, static_cast<double>(in.l));
}

double est_cost_empirical(const Dataset& dataset, const PivotGroupTable& table,
                          std::span<const Payload> sample_queries, double r) {
  if (sample_queries.empty())
    throw std::invalid_argument("est_cost_empirical: need at least one query");
  CountedMetric metric = dataset.counted_metric();
  const std::size_t n = table.rows();
  const std::size_t l = table.groups;
  double total_unpruned = 0.0;
  std::vector<double> qd(table.pool.size());
  for (const auto& q : sample_queries) {
    for (std::size_t p = 0; p < table.pool.size(); ++p) qd[p] = metric(q, table.pool.payloads[p]);
    std::size_t unpruned = 0;
    for (std::size_t row = 0; row < n; ++row) {
      double lb = 0.0;
      for (std::size_t slot = 0; slot < l; ++slot)
        lb = std::max(lb, std::abs(qd[table.pivot_of(row, slot)] - table.dist_of(row, slot)));
      if (lb <= r) ++unpruned;
    }
    total_unpruned += static_cast<double>(unpruned);
  }
  return static_cast<double>(table.group_size) * static_cast<double>(l) +
         total_unpruned / static_cast<double>(sample_queries.size());
}

}  // namespace metriclab
