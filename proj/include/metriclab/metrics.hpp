#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metriclab/payload.hpp"

namespace metriclab {

enum class MetricKind : std::uint8_t { L1 = 0, L2 = 1, Linf = 2, Edit = 3 };
enum class PayloadKind : std::uint8_t { RealVector = 0, String = 1 };
enum class DistanceDomain : std::uint8_t { Continuous = 0, Discrete = 1 };

const char* metric_kind_name(MetricKind k);
std::optional<MetricKind> metric_kind_from_name(const std::string& name);

struct MetricDescriptor {
  MetricKind kind = MetricKind::L2;
  PayloadKind payload_kind = PayloadKind::RealVector;
  std::uint32_t dimension = 0;  // vectors only
  DistanceDomain domain = DistanceDomain::Continuous;
  double n_d = 0.0;  // max distance (continuous) or number of distinct values (discrete)

  static MetricDescriptor lp(MetricKind kind, std::uint32_t dimension,
                             DistanceDomain domain = DistanceDomain::Continuous,
                             double n_d = 0.0);
  static MetricDescriptor edit();
  void validate() const;  // throws std::invalid_argument on a bad combination
};

double lp_distance(std::span<const double> u, std::span<const double> v, MetricKind p);
std::uint32_t edit_distance(const std::string& a, const std::string& b);

// Raw (uncounted) distance between payloads under a descriptor.
double raw_distance(const MetricDescriptor& d, const Payload& a, const Payload& b);

// Every distance evaluation in the system goes through one of these. The
// counter belongs to a single query or build context and is never shared.
class CountedMetric {
 public:
  explicit CountedMetric(MetricDescriptor desc);
  // Test hook: arbitrary distance function behind the same counting interface.
  CountedMetric(MetricDescriptor desc, std::function<double(const Payload&, const Payload&)> fn);

  double operator()(const Payload& a, const Payload& b) const {
    ++count_;
    return fn_ ? fn_(a, b) : raw_distance(desc_, a, b);
  }

  const MetricDescriptor& descriptor() const { return desc_; }
  std::uint64_t count() const { return count_; }
  void reset() { count_ = 0; }

 private:
  MetricDescriptor desc_;
  std::function<double(const Payload&, const Payload&)> fn_;
  mutable std::uint64_t count_ = 0;
};

// mu^2 / (2 sigma^2) over a set of pairwise distances; population variance.
double intrinsic_dim(std::span<const double> distances);

struct AxiomReport {
  bool symmetry = true;
  bool non_negativity = true;
  bool identity = true;
  bool triangle = true;
  // first violating triple (a, b, c) of the triangle inequality, if any
  std::optional<std::array<std::size_t, 3>> violating_triple;
  std::string detail;
  bool all_pass() const { return symmetry && non_negativity && identity && triangle; }
};

AxiomReport check_metric_axioms(const CountedMetric& metric, std::span<const Payload> sample);

}  // namespace metriclab
