#pragma once

// JSON reader/writer for algebra files. The on-disk format names elements
// and lists the cover relation plus the multiplication table; residual
// tables are derived on load and written back out for reference.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "resbinar/algebra.hpp"
#include "resbinar/errors.hpp"
#include "resbinar/lattice.hpp"

namespace resbinar {

struct NamedAlgebra {
  std::string name;
  ResiduatedBinar algebra;
};

namespace detail {

inline int element_index(const std::vector<std::string>& names,
                         const std::string& label) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == label) return static_cast<int>(i);
  throw UnknownLabel(label);
}

inline Table read_table(const nlohmann::ordered_json& rows,
                        const std::vector<std::string>& names,
                        const char* key) {
  const std::size_t n = names.size();
  if (!rows.is_array() || rows.size() != n)
    throw FileFormatError(std::string(key) + " must be an " +
                          std::to_string(n) + "x" + std::to_string(n) +
                          " array");
  Table out;
  out.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n)
      throw FileFormatError(std::string(key) + " must be an " +
                            std::to_string(n) + "x" + std::to_string(n) +
                            " array");
    for (const auto& cell : row) {
      if (!cell.is_string())
        throw FileFormatError(std::string(key) + " entries must be element names");
      out.push_back(static_cast<std::uint8_t>(
          element_index(names, cell.get<std::string>())));
    }
  }
  return out;
}

inline nlohmann::ordered_json table_to_json(const Table& t,
                                            const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < n; ++j)
      row.push_back(names[t[i * n + j]]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

inline NamedAlgebra read_algebra_json(const std::string& text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FileFormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FileFormatError("top level must be an object");
  for (const char* key : {"name", "elements", "covers", "mult"})
    if (!doc.contains(key))
      throw FileFormatError(std::string("missing key: ") + key);

  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  try {
    name = doc["name"].get<std::string>();
    elements = doc["elements"].get<std::vector<std::string>>();
    for (const auto& pair : doc["covers"]) {
      if (!pair.is_array() || pair.size() != 2)
        throw FileFormatError("covers entries must be [lower, upper] pairs");
      covers.emplace_back(pair[0].get<std::string>(),
                          pair[1].get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw FileFormatError(std::string("malformed field: ") + e.what());
  }

  Lattice lat = Lattice::from_covers(elements, covers);
  Table mult = detail::read_table(doc["mult"], elements, "mult");
  ResiduatedBinar alg = ResiduatedBinar::from_mult(std::move(lat), mult);

  if (doc.contains("unit")) {
    const std::string label = doc["unit"].get<std::string>();
    const int want = detail::element_index(elements, label);
    if (!alg.unit())
      throw UnitMismatch("file declares unit " + label +
                         " but the table has none");
    if (*alg.unit() != want)
      throw UnitMismatch("file declares unit " + label + " but the table has " +
                         elements[static_cast<std::size_t>(*alg.unit())]);
  }
  for (const char* key : {"ldiv", "rdiv"}) {
    if (!doc.contains(key)) continue;
    const Table stored = detail::read_table(doc[key], elements, key);
    const Table& derived =
        std::string(key) == "ldiv" ? alg.ldiv_table() : alg.rdiv_table();
    if (stored != derived)
      throw FileFormatError(std::string("stored ") + key +
                            " table disagrees with the derived residuals");
  }
  return {std::move(name), std::move(alg)};
}

inline std::string write_algebra_json(const NamedAlgebra& na) {
  const auto& alg = na.algebra;
  const auto& names = alg.lattice().names();
  nlohmann::ordered_json doc;
  doc["name"] = na.name;
  doc["elements"] = names;
  nlohmann::ordered_json covers = nlohmann::ordered_json::array();
  for (const auto& [lo, hi] : alg.lattice().covers())
    covers.push_back({names[static_cast<std::size_t>(lo)],
                      names[static_cast<std::size_t>(hi)]});
  doc["covers"] = std::move(covers);
  if (alg.unit())
    doc["unit"] = names[static_cast<std::size_t>(*alg.unit())];
  doc["mult"] = detail::table_to_json(alg.mult_table(), names);
  doc["ldiv"] = detail::table_to_json(alg.ldiv_table(), names);
  doc["rdiv"] = detail::table_to_json(alg.rdiv_table(), names);
  return doc.dump(2) + "\n";
}

inline NamedAlgebra read_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileFormatError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_algebra_json(buf.str());
}

inline void write_algebra_file(const std::filesystem::path& path,
                               const NamedAlgebra& na) {
  std::ofstream out(path);
  if (!out) throw FileFormatError("cannot open " + path.string() + " for writing");
  out << write_algebra_json(na);
}

}  // namespace resbinar
