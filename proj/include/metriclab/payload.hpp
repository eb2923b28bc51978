#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace metriclab {

using ObjectId = std::uint32_t;
inline constexpr ObjectId kInvalidId = static_cast<ObjectId>(-1);

// An object is either a real-valued vector or a string.
using Payload = std::variant<std::vector<double>, std::string>;

inline bool is_vector(const Payload& p) { return p.index() == 0; }
inline bool is_string(const Payload& p) { return p.index() == 1; }

inline const std::vector<double>& as_vector(const Payload& p) {
  return std::get<std::vector<double>>(p);
}
inline const std::string& as_string(const Payload& p) {
  return std::get<std::string>(p);
}

// Storage estimate in bytes, used by the simulated page model.
inline std::uint32_t payload_bytes(const Payload& p) {
  if (is_vector(p)) {
    auto n = static_cast<std::uint32_t>(as_vector(p).size() * sizeof(double));
    return n == 0 ? 1u : n;
  }
  auto n = static_cast<std::uint32_t>(as_string(p).size());
  return n == 0 ? 1u : n;
}

}  // namespace metriclab
