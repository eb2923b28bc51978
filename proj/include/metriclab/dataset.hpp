#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "metriclab/metrics.hpp"
#include "metriclab/payload.hpp"

namespace metriclab {

struct ObjectRecord {
  ObjectId id = 0;
  Payload payload;
  std::uint32_t byte_size = 1;
};

// Immutable after construction; shareable across threads.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<Payload> payloads, MetricDescriptor metric);

  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  const ObjectRecord& record(ObjectId id) const { return records_[id]; }
  const Payload& payload(ObjectId id) const { return records_[id].payload; }
  const std::vector<ObjectRecord>& records() const { return records_; }
  const MetricDescriptor& metric() const { return metric_; }
  CountedMetric counted_metric() const { return CountedMetric(metric_); }

  // FNV-1a over payload bytes; used to pair serialized indexes with their data.
  std::uint64_t content_hash() const;

 private:
  std::vector<ObjectRecord> records_;
  MetricDescriptor metric_;
};

// One object per nonempty line, `dimension` numeric fields separated by
// whitespace or commas; '#' lines are comments.
Dataset load_vector_file(const std::string& path, std::uint32_t dimension,
                         MetricKind kind = MetricKind::L2);

// One object per nonempty line.
Dataset load_string_file(const std::string& path);

// Integer vectors: coordinates 1..free_dims uniform on [0,100]; the remaining
// coordinates are seed-derived integer linear combinations of the free ones,
// reduced mod 101 to stay bounded.
Dataset gen_synthetic(std::int64_t n, std::uint32_t dim, std::uint32_t free_dims,
                      std::uint64_t seed, MetricKind kind = MetricKind::Linf);

// The coefficient matrix used by gen_synthetic for a given seed, row per
// derived coordinate; exposed so generated data can be re-derived and checked.
std::vector<std::vector<std::int64_t>> synthetic_coefficients(std::uint32_t dim,
                                                              std::uint32_t free_dims,
                                                              std::uint64_t seed);

// k distinct records, deterministic for a given seed.
Dataset sample(const Dataset& dataset, std::size_t k, std::uint64_t seed);
std::vector<ObjectId> sample_ids(std::size_t n, std::size_t k, std::uint64_t seed);

void save_vector_file(const Dataset& dataset, const std::string& path);
void save_string_file(const Dataset& dataset, const std::string& path);

}  // namespace metriclab
