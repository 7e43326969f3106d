#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cgt/group.hpp"
#include "cgt/permutation.hpp"

namespace cgt {

// Group-spec file: {"name": str, "degree": int, "generators": [[int,...],...]}
// where each generator is a full image array. Rejections carry the offending
// field path so a bad file is fixable from the message alone.
inline GroupSpec group_spec_from_json(const nlohmann::json& j,
                                      const std::string& where) {
  auto fail = [&where](const std::string& field, const std::string& why) {
    throw std::invalid_argument(where + ": " + field + ": " + why);
  };
  if (!j.is_object()) fail("$", "expected a JSON object");
  if (!j.contains("name") || !j["name"].is_string())
    fail("name", "missing or not a string");
  if (!j.contains("degree") || !j["degree"].is_number_integer())
    fail("degree", "missing or not an integer");
  const int64_t degree = j["degree"].get<int64_t>();
  if (degree < 1 || degree > 1'000'000) fail("degree", "out of range");
  if (!j.contains("generators") || !j["generators"].is_array() ||
      j["generators"].empty())
    fail("generators", "missing, not an array, or empty");

  GroupSpec spec;
  spec.name = j["name"].get<std::string>();
  size_t gi = 0;
  for (const auto& gen : j["generators"]) {
    const std::string field = "generators[" + std::to_string(gi) + "]";
    if (!gen.is_array()) fail(field, "not an array");
    if (static_cast<int64_t>(gen.size()) != degree)
      fail(field, "length " + std::to_string(gen.size()) +
                      " does not match degree " + std::to_string(degree));
    std::vector<uint32_t> images;
    images.reserve(gen.size());
    size_t pi = 0;
    for (const auto& v : gen) {
      if (!v.is_number_integer())
        fail(field + "[" + std::to_string(pi) + "]", "not an integer");
      const int64_t img = v.get<int64_t>();
      if (img < 0 || img >= degree)
        fail(field + "[" + std::to_string(pi) + "]",
             "image " + std::to_string(img) + " outside [0, " +
                 std::to_string(degree) + ")");
      images.push_back(static_cast<uint32_t>(img));
      ++pi;
    }
    if (!is_bijection(images))
      fail(field, "not a bijection (an image value repeats)");
    spec.generators.emplace_back(std::move(images));
    ++gi;
  }
  return spec;
}

inline GroupSpec load_group_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(path + ": cannot open file");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return group_spec_from_json(j, path);
}

}  // namespace cgt
