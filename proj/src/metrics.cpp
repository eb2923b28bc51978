#include "metriclab/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace metriclab {

const char* metric_kind_name(MetricKind k) {
  switch (k) {
    case MetricKind::L1: return "l1";
    case MetricKind::L2: return "l2";
    case MetricKind::Linf: return "linf";
    case MetricKind::Edit: return "edit";
  }
  return "?";
}

std::optional<MetricKind> metric_kind_from_name(const std::string& name) {
  if (name == "l1" || name == "L1") return MetricKind::L1;
  if (name == "l2" || name == "L2") return MetricKind::L2;
  if (name == "linf" || name == "Linf" || name == "LINF") return MetricKind::Linf;
  if (name == "edit" || name == "Edit") return MetricKind::Edit;
  return std::nullopt;
}

MetricDescriptor MetricDescriptor::lp(MetricKind kind, std::uint32_t dimension,
                                      DistanceDomain domain, double n_d) {
  MetricDescriptor d;
  d.kind = kind;
  d.payload_kind = PayloadKind::RealVector;
  d.dimension = dimension;
  d.domain = domain;
  d.n_d = n_d;
  d.validate();
  return d;
}

MetricDescriptor MetricDescriptor::edit() {
  MetricDescriptor d;
  d.kind = MetricKind::Edit;
  d.payload_kind = PayloadKind::String;
  d.dimension = 0;
  d.domain = DistanceDomain::Discrete;
  d.n_d = 0.0;
  return d;
}

void MetricDescriptor::validate() const {
  if (kind == MetricKind::Edit && payload_kind != PayloadKind::String)
    throw std::invalid_argument("edit distance requires string payloads");
  if (kind != MetricKind::Edit && payload_kind != PayloadKind::RealVector)
    throw std::invalid_argument("Lp metrics require real-vector payloads");
  if (payload_kind == PayloadKind::RealVector && dimension == 0)
    throw std::invalid_argument("vector metric requires dimension >= 1");
  if (n_d < 0.0) throw std::invalid_argument("n_d must be positive when set");
}

double lp_distance(std::span<const double> u, std::span<const double> v, MetricKind p) {
  if (u.size() != v.size())
    throw std::invalid_argument("lp_distance: dimension mismatch");
  if (u.empty()) throw std::invalid_argument("lp_distance: dimension must be >= 1");
  double acc = 0.0;
  switch (p) {
    case MetricKind::L1:
      for (std::size_t i = 0; i < u.size(); ++i) acc += std::abs(u[i] - v[i]);
      return acc;
    case MetricKind::L2:
      for (std::size_t i = 0; i < u.size(); ++i) {
        const double d = u[i] - v[i];
        acc += d * d;
      }
      return std::sqrt(acc);
    case MetricKind::Linf:
      for (std::size_t i = 0; i < u.size(); ++i) acc = std::max(acc, std::abs(u[i] - v[i]));
      return acc;
    case MetricKind::Edit:
      break;
  }
  throw std::invalid_argument("lp_distance: p must be 1, 2 or infinity");
}

std::uint32_t edit_distance(const std::string& a, const std::string& b) {
  const std::size_t n = a.size(), m = b.size();
  if (n == 0) return static_cast<std::uint32_t>(m);
  if (m == 0) return static_cast<std::uint32_t>(n);
  std::vector<std::uint32_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const std::uint32_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0u : 1u);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

double raw_distance(const MetricDescriptor& d, const Payload& a, const Payload& b) {
  if (d.kind == MetricKind::Edit) return static_cast<double>(edit_distance(as_string(a), as_string(b)));
  return lp_distance(as_vector(a), as_vector(b), d.kind);
}

CountedMetric::CountedMetric(MetricDescriptor desc) : desc_(desc) {}
CountedMetric::CountedMetric(MetricDescriptor desc,
                             std::function<double(const Payload&, const Payload&)> fn)
    : desc_(desc), fn_(std::move(fn)) {}

double intrinsic_dim(std::span<const double> distances) {
  if (distances.size() < 2)
    throw std::invalid_argument("intrinsic_dim: need at least two distances");
  double mean = 0.0;
  for (double d : distances) mean += d;
  mean /= static_cast<double>(distances.size());
  double var = 0.0;
  for (double d : distances) {
    const double dd = d - mean;
    var += dd * dd;
  }
  var /= static_cast<double>(distances.size());
  if (var <= 0.0)
    throw std::invalid_argument("intrinsic_dim: degenerate distance distribution (zero variance)");
  return mean * mean / (2.0 * var);
}

AxiomReport check_metric_axioms(const CountedMetric& metric, std::span<const Payload> sample) {
  if (sample.size() < 3)
    throw std::invalid_argument("check_metric_axioms: sample size must be >= 3");
  AxiomReport rep;
  const std::size_t n = sample.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] = metric(sample[i], sample[j]);

  for (std::size_t i = 0; i < n && rep.all_pass(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i * n + j] < 0.0) {
        rep.non_negativity = false;
        rep.detail = "negative distance";
        break;
      }
      if (d[i * n + j] != d[j * n + i]) {
        rep.symmetry = false;
        rep.detail = "asymmetric pair";
        break;
      }
      if (i == j && d[i * n + j] != 0.0) {
        rep.identity = false;
        rep.detail = "d(a,a) != 0";
        break;
      }
      if (i != j && d[i * n + j] == 0.0 && !(sample[i] == sample[j])) {
        rep.identity = false;
        rep.detail = "zero distance between distinct objects";
        break;
      }
    }
  }
  for (std::size_t a = 0; a < n && rep.triangle; ++a)
    for (std::size_t b = 0; b < n && rep.triangle; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (d[a * n + c] > d[a * n + b] + d[b * n + c]) {
          rep.triangle = false;
          rep.violating_triple = std::array<std::size_t, 3>{a, b, c};
          rep.detail = "triangle inequality violated";
          break;
        }
  return rep;
}

}  // namespace metriclab
