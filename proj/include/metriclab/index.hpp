#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "metriclab/dataset.hpp"
#include "metriclab/io.hpp"
#include "metriclab/pivots.hpp"
#include "metriclab/session.hpp"

namespace metriclab {

enum class IndexKind : std::uint8_t {
  Laesa = 0,
  Ept = 1,
  Bkt = 2,
  Fqt = 3,
  Mvpt = 4,
  Bst = 5,
  Ght = 6,
  Gnat = 7,
  Sat = 8,
  Lc = 9,
  Mtree = 10,
  Pmtree = 11,
  DindexLite = 12,
};

const char* index_kind_name(IndexKind k);

// Common interface of the thirteen structures. Concrete classes keep their
// nodes in flat vectors (construction order), which doubles as the page-model
// layout.
class IndexBase {
 public:
  virtual ~IndexBase() = default;

  virtual IndexKind kind() const = 0;
  // reporting name, e.g. "ept*" or "bst*" for the starred variants
  virtual std::string name() const { return index_kind_name(kind()); }

  virtual void range_search(QuerySession& qs, double r, ResultSet& out) const = 0;
  // seed_only: greedy descent that stops as soon as k candidates are found,
  // used by the seeded MkNN strategy; no pruning radius is applied before the
  // accumulator fills.
  virtual void knn_search(QuerySession& qs, KnnAccumulator& acc, bool seed_only) const = 0;

  // Full structural re-verification; throws std::logic_error on violation.
  virtual void audit(const Dataset& dataset) const = 0;

  // Byte size per structure node, in construction order; empty for
  // memory-class structures.
  virtual const std::vector<std::uint32_t>& node_bytes() const { return kNoNodes; }

  virtual void save(BinaryWriter& w) const = 0;
  // Re-attach payload copies (pivots, centers) after deserialization.
  virtual void rebind(const Dataset& dataset) {}

 protected:
  static const std::vector<std::uint32_t> kNoNodes;
};

struct IndexHandle {
  std::shared_ptr<const Dataset> dataset;
  std::unique_ptr<IndexBase> index;
  std::uint64_t build_compdists = 0;

  IndexKind kind() const { return index->kind(); }
  std::string name() const { return index->name(); }
};

enum class BstMode : std::uint8_t { Insertion = 0, TopDown = 1 };
enum class SatRootRule : std::uint8_t { Random = 0, Distal = 1 };

using DatasetPtr = std::shared_ptr<const Dataset>;

IndexHandle build_laesa(DatasetPtr dataset, PivotSet pivots);
IndexHandle build_ept(DatasetPtr dataset, std::size_t l, std::size_t g, std::uint64_t seed);
IndexHandle build_ept_star(DatasetPtr dataset, std::size_t l, std::size_t cp_scale,
                           std::size_t sample_size, std::uint64_t seed);
IndexHandle build_bkt(DatasetPtr dataset, std::size_t pivot_budget, double bucket_width = 0.0);
IndexHandle build_fqt(DatasetPtr dataset, PivotSet pivots, double bucket_width = 0.0);
IndexHandle build_mvpt(DatasetPtr dataset, std::size_t arity = 5, std::size_t leaf_capacity = 5);
IndexHandle build_bst(DatasetPtr dataset, BstMode mode);
IndexHandle build_ght(DatasetPtr dataset);
IndexHandle build_gnat(DatasetPtr dataset, std::size_t arity = 5);
IndexHandle build_sat(DatasetPtr dataset, SatRootRule root_rule = SatRootRule::Distal);
IndexHandle build_lc(DatasetPtr dataset, std::size_t bucket_size);
IndexHandle build_mtree(DatasetPtr dataset, std::size_t node_capacity = 0);
IndexHandle build_pmtree(DatasetPtr dataset, std::size_t node_capacity, PivotSet pivots);
IndexHandle build_dindex_lite(DatasetPtr dataset, std::size_t levels, double rho = 0.0);

// Node capacity such that one node of `entries_extra_bytes`-byte entries fits
// a 4KB page.
std::size_t default_node_capacity(const Dataset& dataset, std::size_t extra_entry_bytes);

// Sampled (max distance)/32 bucket width for continuous metrics; 1 for
// integer-valued ones.
double default_bucket_width(const Dataset& dataset);

// Versioned binary index file, magic "MIL1".
void save_index(const IndexHandle& handle, const std::string& path);
IndexHandle load_index(const std::string& path, DatasetPtr dataset);

}  // namespace metriclab
