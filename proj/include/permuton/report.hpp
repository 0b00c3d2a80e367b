#pragma once

/**
 * @file report.hpp
 * @brief JSON rendering of results. Exact values are always text literals;
 * no JSON number in a report is ever a float.
 */

#include "json.hpp"

#include <cstdio>
#include <string>
#include <vector>

#include "permuton/character_table.hpp"
#include "permuton/checks.hpp"
#include "permuton/group_action.hpp"
#include "permuton/invariants.hpp"
#include "permuton/quantum.hpp"

namespace permuton {

inline constexpr const char* kVersion = "1.0.0";

using Json = nlohmann::ordered_json;

/// Decimal hint for a value; never authoritative.
inline std::string approx_text(const Cyclotomic& a) {
  auto z = approximate(a);
  char buf[96];
  if (a == conj(a))
    std::snprintf(buf, sizeof buf, "%.12g", z.real());
  else
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

inline Json exact_json(const Cyclotomic& a, bool approx = false) {
  Json j = to_string(a);
  if (!approx) return j;
  return Json{{"exact", to_string(a)}, {"approx", approx_text(a)}};
}

inline Json to_json(const NaturalVector& v) {
  Json j = Json::array();
  for (auto c : v.components()) j.push_back(c);
  return j;
}

inline Json to_json(const BornResult& r, bool approx = false) {
  Json j;
  j["amplitude"] = exact_json(r.amplitude, approx);
  j["probability"] = exact_json(r.probability, approx);
  j["is_rational"] = r.is_rational;
  if (auto q = r.rational_probability()) j["fraction"] = to_string(*q);
  return j;
}

inline Json to_json(const CharacterTable& t) {
  Json j;
  const char* source = t.source == CharacterTable::Source::builtin ? "builtin"
                       : t.source == CharacterTable::Source::dixon ? "computed"
                                                                   : "file";
  j["source"] = source;
  Json classes = Json::array();
  for (const auto& c : t.group.conjugacy_classes())
    classes.push_back({{"representative", c.representative.to_string()},
                       {"size", c.size()},
                       {"element_order", c.element_order}});
  j["classes"] = classes;
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    Json values = Json::array();
    for (const auto& v : t.rows[i]) values.push_back(to_string(v));
    rows.push_back({{"label", t.labels[i]}, {"degree", t.dims[i]}, {"values", values}});
  }
  j["rows"] = rows;
  return j;
}

inline Json to_json(const BlockSystem& b) {
  Json cells = Json::array();
  for (const auto& cell : b.cells) cells.push_back(cell);
  return cells;
}

inline Json to_json(const IcosahedronGeometry& geo) {
  Json j;
  j["vertices"] = IcosahedronGeometry::kVertices;
  Json blocks = Json::array();
  for (const auto& b : geo.blocks()) blocks.push_back(b);
  j["blocks"] = blocks;
  Json adjacency = Json::object();
  Json complement = Json::object();
  for (std::size_t k = 1; k <= IcosahedronGeometry::kVertices; ++k) {
    const auto& nb = geo.neighborhood(k);
    adjacency[std::to_string(k)] = std::vector<std::size_t>(nb.begin(), nb.end());
    complement[std::to_string(k)] = IcosahedronGeometry::complement(k);
  }
  j["adjacency"] = adjacency;
  j["complement"] = complement;
  return j;
}

inline Json to_json(const InterferenceResult& r) {
  Json j;
  j["count"] = r.pairs.size();
  j["orbit_count"] = r.orbit_count;
  j["candidates"] = r.candidates;
  Json pairs = Json::array();
  for (const auto& [m, n] : r.pairs) pairs.push_back(Json::array({to_json(m), to_json(n)}));
  j["pairs"] = pairs;
  return j;
}

inline Json to_json(const CheckResult& r) {
  return Json{{"key", r.key}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}};
}

/// True iff no floating-point number occurs anywhere in j.
inline bool free_of_floats(const Json& j) {
  if (j.is_number_float()) return false;
  if (j.is_structured())
    for (const auto& item : j)
      if (!free_of_floats(item)) return false;
  return true;
}

/// Deterministic rendering; throws if a float slipped in.
inline std::string render(const Json& report) {
  if (!free_of_floats(report))
    throw Error(ErrorKind::consistency, "report contains a floating-point number");
  return report.dump(2) + "\n";
}

}  // namespace permuton
