#include "metriclab/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "metriclab/rng.hpp"

namespace metriclab {

Dataset::Dataset(std::vector<Payload> payloads, MetricDescriptor metric) : metric_(metric) {
  records_.reserve(payloads.size());
  ObjectId id = 0;
  for (auto& p : payloads) {
    if (metric_.payload_kind == PayloadKind::RealVector) {
      if (!is_vector(p) || as_vector(p).size() != metric_.dimension)
        throw std::invalid_argument("dataset: payload incompatible with metric");
    } else if (!is_string(p)) {
      throw std::invalid_argument("dataset: payload incompatible with metric");
    }
    ObjectRecord rec;
    rec.id = id++;
    rec.byte_size = payload_bytes(p);
    rec.payload = std::move(p);
    records_.push_back(std::move(rec));
  }
}

std::uint64_t Dataset::content_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const void* data, std::size_t len) {
    const auto* b = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= b[i];
      h *= 1099511628211ull;
    }
  };
  for (const auto& rec : records_) {
    if (is_vector(rec.payload)) {
      const auto& v = as_vector(rec.payload);
      mix(v.data(), v.size() * sizeof(double));
    } else {
      const auto& s = as_string(rec.payload);
      mix(s.data(), s.size());
      mix("\n", 1);
    }
  }
  return h;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

Dataset load_vector_file(const std::string& path, std::uint32_t dimension, MetricKind kind) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open vector file: " + path);
  std::vector<Payload> payloads;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() != dimension) {
      std::ostringstream msg;
      msg << path << ":" << lineno << ": expected " << dimension << " fields, got "
          << fields.size();
      throw std::runtime_error(msg.str());
    }
    std::vector<double> v(dimension);
    for (std::uint32_t i = 0; i < dimension; ++i) {
      try {
        std::size_t used = 0;
        v[i] = std::stod(fields[i], &used);
        if (used != fields[i].size()) throw std::invalid_argument(fields[i]);
      } catch (const std::exception&) {
        std::ostringstream msg;
        msg << path << ":" << lineno << ": malformed numeric field '" << fields[i] << "'";
        throw std::runtime_error(msg.str());
      }
    }
    payloads.emplace_back(std::move(v));
  }
  return Dataset(std::move(payloads), MetricDescriptor::lp(kind, dimension));
}

Dataset load_string_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open string file: " + path);
  std::vector<Payload> payloads;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    for (unsigned char c : line) {
      // reject bytes that cannot start or continue valid UTF-8
      if (c == 0xC0 || c == 0xC1 || c >= 0xF5) {
        std::ostringstream msg;
        msg << path << ":" << lineno << ": invalid UTF-8 byte";
        throw std::runtime_error(msg.str());
      }
    }
    payloads.emplace_back(std::move(line));
  }
  return Dataset(std::move(payloads), MetricDescriptor::edit());
}

std::vector<std::vector<std::int64_t>> synthetic_coefficients(std::uint32_t dim,
                                                              std::uint32_t free_dims,
                                                              std::uint64_t seed) {
  Rng rng(mix_seed(seed, 0xC0EF));
  std::vector<std::vector<std::int64_t>> rows;
  for (std::uint32_t d = free_dims; d < dim; ++d) {
    std::vector<std::int64_t> row(free_dims);
    for (auto& c : row) c = rng.between(1, 5);
    rows.push_back(std::move(row));
  }
  return rows;
}

Dataset gen_synthetic(std::int64_t n, std::uint32_t dim, std::uint32_t free_dims,
                      std::uint64_t seed, MetricKind kind) {
  if (n < 0) throw std::invalid_argument("gen_synthetic: n must be >= 0");
  if (free_dims < 1 || free_dims > dim)
    throw std::invalid_argument("gen_synthetic: need 1 <= free_dims <= dim");
  const auto coeffs = synthetic_coefficients(dim, free_dims, seed);
  Rng rng(mix_seed(seed, 0xDA7A));
  std::vector<Payload> payloads;
  payloads.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    std::vector<double> v(dim);
    std::vector<std::int64_t> free_vals(free_dims);
    for (std::uint32_t j = 0; j < free_dims; ++j) {
      free_vals[j] = rng.between(0, 100);
      v[j] = static_cast<double>(free_vals[j]);
    }
    for (std::uint32_t j = free_dims; j < dim; ++j) {
      std::int64_t acc = 0;
      const auto& row = coeffs[j - free_dims];
      for (std::uint32_t f = 0; f < free_dims; ++f) acc += row[f] * free_vals[f];
      v[j] = static_cast<double>(acc % 101);
    }
    payloads.emplace_back(std::move(v));
  }
  return Dataset(std::move(payloads),
                 MetricDescriptor::lp(kind, dim, DistanceDomain::Discrete, 101.0));
}

std::vector<ObjectId> sample_ids(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k > n) throw std::invalid_argument("sample: k exceeds dataset cardinality");
  std::vector<ObjectId> ids(n);
  std::iota(ids.begin(), ids.end(), 0u);
  Rng rng(mix_seed(seed, 0x5A11));
  // partial Fisher-Yates: the first k slots are the sample
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(ids[i], ids[j]);
  }
  ids.resize(k);
  return ids;
}

Dataset sample(const Dataset& dataset, std::size_t k, std::uint64_t seed) {
  auto ids = sample_ids(dataset.size(), k, seed);
  std::vector<Payload> payloads;
  payloads.reserve(k);
  for (ObjectId id : ids) payloads.push_back(dataset.payload(id));
  return Dataset(std::move(payloads), dataset.metric());
}

void save_vector_file(const Dataset& dataset, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write vector file: " + path);
  out.precision(17);
  for (const auto& rec : dataset.records()) {
    const auto& v = as_vector(rec.payload);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out << ' ';
      out << v[i];
    }
    out << '\n';
  }
}

void save_string_file(const Dataset& dataset, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write string file: " + path);
  for (const auto& rec : dataset.records()) out << as_string(rec.payload) << '\n';
}

}  // namespace metriclab
