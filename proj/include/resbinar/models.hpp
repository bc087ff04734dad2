#pragma once

// The seven bundled models. A1..A6 are the minimal four- and five-element
// witnesses separating the six laws that can fail; A7 is unital but not
// integral and satisfies only the unit-dependent laws. Stored in the same
// JSON format the CLI reads, so they double as format examples.

#include <array>
#include <filesystem>
#include <string_view>
#include <vector>

#include "resbinar/errors.hpp"
#include "resbinar/io.hpp"

namespace resbinar {

struct BundledModel {
  const char* name;
  const char* text;
};

inline const std::array<BundledModel, 7>& bundle() {
  static const std::array<BundledModel, 7> models = {{
      {"A1", R"({
  "name": "A1",
  "elements": ["bot", "a", "b", "top"],
  "covers": [["bot", "a"], ["bot", "b"], ["a", "top"], ["b", "top"]],
  "mult": [
    ["bot", "bot", "bot", "bot"],
    ["bot", "bot", "bot", "bot"],
    ["bot", "bot", "top", "top"],
    ["bot", "bot", "top", "top"]
  ]
})"},
      {"A2", R"({
  "name": "A2",
  "elements": ["bot", "a", "b", "top"],
  "covers": [["bot", "a"], ["bot", "b"], ["a", "top"], ["b", "top"]],
  "mult": [
    ["bot", "bot", "bot", "bot"],
    ["bot", "bot", "bot", "bot"],
    ["bot", "a", "b", "top"],
    ["bot", "a", "b", "top"]
  ]
})"},
      {"A3", R"({
  "name": "A3",
  "elements": ["bot", "a", "b", "top"],
  "covers": [["bot", "a"], ["bot", "b"], ["a", "top"], ["b", "top"]],
  "mult": [
    ["bot", "bot", "bot", "bot"],
    ["bot", "bot", "a", "a"],
    ["bot", "bot", "b", "b"],
    ["bot", "bot", "top", "top"]
  ]
})"},
      {"A4", R"({
  "name": "A4",
  "elements": ["bot", "a", "b", "c", "top"],
  "covers": [["bot", "a"], ["bot", "b"], ["a", "c"], ["b", "c"], ["c", "top"]],
  "mult": [
    ["bot", "bot", "bot", "bot", "bot"],
    ["bot", "top", "bot", "top", "top"],
    ["bot", "b", "bot", "b", "b"],
    ["bot", "top", "bot", "top", "top"],
    ["bot", "top", "bot", "top", "top"]
  ]
})"},
      {"A5", R"({
  "name": "A5",
  "elements": ["bot", "a", "b", "c", "top"],
  "covers": [["bot", "a"], ["bot", "b"], ["a", "c"], ["b", "c"], ["c", "top"]],
  "mult": [
    ["bot", "bot", "bot", "bot", "bot"],
    ["bot", "top", "b", "top", "top"],
    ["bot", "bot", "bot", "bot", "bot"],
    ["bot", "top", "b", "top", "top"],
    ["bot", "top", "b", "top", "top"]
  ]
})"},
      {"A6", R"({
  "name": "A6",
  "elements": ["bot", "a", "b", "c", "top"],
  "covers": [["bot", "c"], ["c", "a"], ["c", "b"], ["a", "top"], ["b", "top"]],
  "mult": [
    ["bot", "bot", "bot", "bot", "bot"],
    ["bot", "a", "bot", "bot", "a"],
    ["bot", "bot", "b", "bot", "b"],
    ["bot", "bot", "bot", "bot", "bot"],
    ["bot", "a", "b", "bot", "top"]
  ]
})"},
      {"A7", R"({
  "name": "A7",
  "elements": ["bot", "a", "b", "e", "top"],
  "covers": [["bot", "a"], ["bot", "b"], ["a", "e"], ["b", "e"], ["e", "top"]],
  "unit": "e",
  "mult": [
    ["bot", "bot", "bot", "bot", "bot"],
    ["bot", "a", "bot", "a", "e"],
    ["bot", "bot", "b", "b", "top"],
    ["bot", "a", "b", "e", "top"],
    ["bot", "a", "top", "top", "top"]
  ]
})"},
  }};
  return models;
}

inline NamedAlgebra bundled_model(std::string_view name) {
  for (const BundledModel& m : bundle())
    if (name == m.name) return read_algebra_json(m.text);
  throw ConfigError("no bundled model named " + std::string(name));
}

inline std::vector<NamedAlgebra> all_bundled_models() {
  std::vector<NamedAlgebra> out;
  out.reserve(bundle().size());
  for (const BundledModel& m : bundle()) out.push_back(read_algebra_json(m.text));
  return out;
}

// Writes NAME.alg files, residual tables included, into dir.
inline std::vector<std::filesystem::path> export_bundle(
    const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const NamedAlgebra& na : all_bundled_models()) {
    auto path = dir / (na.name + ".alg");
    write_algebra_file(path, na);
    written.push_back(std::move(path));
  }
  return written;
}

}  // namespace resbinar
