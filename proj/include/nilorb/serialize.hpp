#pragma once

#include "nilorb/algebra.hpp"
#include "nilorb/complexify.hpp"
#include "nilorb/oracle.hpp"
#include "nilorb/orbit.hpp"
#include "nilorb/poset.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace nilorb {

using Json = nlohmann::ordered_json;

inline Json partition_to_json(const Partition& lam) {
  return Json(lam.parts());
}

inline Partition partition_from_json(const Json& j) {
  if (!j.is_array())
    throw std::invalid_argument("partition: expected a JSON array of integers");
  std::vector<int> parts;
  for (const Json& v : j) {
    if (!v.is_number_integer())
      throw std::invalid_argument("partition: expected a JSON array of integers");
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));  // re-validates ordering and positivity
}

inline Json diagram_rows_to_json(const SignedYoungDiagram& y) {
  Json rows = Json::array();
  for (const SignedRow& r : y.rows()) rows.push_back(r.expanded());
  return rows;
}

inline Json diagram_to_json(const SignedYoungDiagram& y) {
  Json j;
  j["shape"] = partition_to_json(y.shape());
  j["rows"] = diagram_rows_to_json(y);
  return j;
}

inline SignedRow signed_row_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("diagram row: empty row");
  Sign expected = Sign::plus;
  switch (text.front()) {
    case '+': expected = Sign::plus; break;
    case '-': expected = Sign::minus; break;
    default:
      throw std::invalid_argument("diagram row: bad character in '" + text + "'");
  }
  const Sign start = expected;
  for (char c : text) {
    if (c != sign_char(expected))
      throw std::invalid_argument("diagram row: signs must alternate in '" + text + "'");
    expected = opposite(expected);
  }
  return SignedRow{static_cast<int>(text.size()), start};
}

inline SignedYoungDiagram diagram_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("rows"))
    throw std::invalid_argument("diagram: expected {\"shape\":...,\"rows\":...}");
  const Partition shape = partition_from_json(j.at("shape"));
  if (!j.at("rows").is_array())
    throw std::invalid_argument("diagram: rows must be an array of strings");
  std::vector<SignedRow> rows;
  for (const Json& r : j.at("rows")) {
    if (!r.is_string())
      throw std::invalid_argument("diagram: rows must be an array of strings");
    rows.push_back(signed_row_from_string(r.get<std::string>()));
  }
  SignedYoungDiagram y(std::move(rows));
  if (!(y.shape() == shape))
    throw std::invalid_argument("diagram: rows do not match the stated shape");
  return y;
}

inline Json decoration_to_json(Decoration d) {
  if (d == Decoration::none) return nullptr;
  return decoration_label(d);
}

inline Decoration decoration_from_json(const Json& j) {
  if (j.is_null()) return Decoration::none;
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "+") return Decoration::plus;
    if (s == "-") return Decoration::minus;
    if (s == "++") return Decoration::plus_plus;
    if (s == "+-") return Decoration::plus_minus;
    if (s == "-+") return Decoration::minus_plus;
    if (s == "--") return Decoration::minus_minus;
    throw std::invalid_argument("decoration: unknown tag '" + s + "'");
  }
  throw std::invalid_argument("decoration: expected null or a tag string");
}

inline Json simple_orbit_to_json(const SimpleOrbit& o) {
  Json j;
  if (o.is_partition_based()) {
    j["partition"] = partition_to_json(o.partition());
  } else {
    j["shape"] = partition_to_json(o.diagram().shape());
    j["rows"] = diagram_rows_to_json(o.diagram());
  }
  j["decoration"] = decoration_to_json(o.decoration());
  return j;
}

inline SimpleOrbit simple_orbit_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("orbit: expected a JSON object");
  const Decoration dec =
      j.contains("decoration") ? decoration_from_json(j.at("decoration"))
                               : Decoration::none;
  if (j.contains("partition")) return SimpleOrbit(partition_from_json(j.at("partition")), dec);
  if (j.contains("shape")) return SimpleOrbit(diagram_from_json(j), dec);
  throw std::invalid_argument("orbit: expected a 'partition' or 'shape' key");
}

inline Json orbit_to_json(const OrbitIndex& o) {
  if (o.is_simple()) return simple_orbit_to_json(o.simple());
  Json summands = Json::array();
  for (const SimpleOrbit& c : o.components()) summands.push_back(simple_orbit_to_json(c));
  Json j;
  j["summands"] = std::move(summands);
  return j;
}

inline OrbitIndex orbit_from_json(const Json& j) {
  if (j.is_object() && j.contains("summands")) {
    if (!j.at("summands").is_array())
      throw std::invalid_argument("orbit: summands must be an array");
    std::vector<SimpleOrbit> components;
    for (const Json& c : j.at("summands")) components.push_back(simple_orbit_from_json(c));
    return OrbitIndex(std::move(components));
  }
  return OrbitIndex(simple_orbit_from_json(j));
}

inline Json centralizer_report_to_json(const CentralizerReport& r) {
  Json j;
  j["algebra_dim"] = r.algebra_dim;
  j["centralizer_dim"] = r.centralizer_dim;
  j["orbit_dim"] = r.orbit_dim;
  return j;
}

/// Full surjectivity report, including both the enumerated answer and the
/// closed-form predicate so that their agreement is visible in the output.
inline Json surjectivity_report_to_json(const AlgebraSpec& g,
                                        const SurjectivityReport& report,
                                        const std::vector<OrbitIndex>& img) {
  Json j;
  j["algebra"] = g.to_string();
  j["surjective"] = report.surjective;
  Json image_json = Json::array();
  for (const OrbitIndex& o : img) image_json.push_back(orbit_to_json(o));
  j["image"] = std::move(image_json);
  Json missed_json = Json::array();
  for (const OrbitIndex& o : report.missed) missed_json.push_back(orbit_to_json(o));
  j["missed"] = std::move(missed_json);
  const bool predicate = theorem1_predicate(g);
  j["theorem_predicate"] = predicate;
  j["agree"] = predicate == report.surjective;
  return j;
}

/// Poset element serialization: undecorated partition-based elements print
/// as bare arrays (the common sl case), everything else as full orbit JSON.
inline Json poset_element_to_json(const OrbitIndex& o) {
  if (o.is_simple() && o.simple().is_partition_based() &&
      o.simple().decoration() == Decoration::none)
    return partition_to_json(o.simple().partition());
  return orbit_to_json(o);
}

inline Json poset_to_json(const FinitePoset& p) {
  Json elements = Json::array();
  for (const OrbitIndex& o : p.elements()) elements.push_back(poset_element_to_json(o));
  Json covers = Json::array();
  for (const auto& [upper, lower] : p.hasse())
    covers.push_back(Json::array({upper, lower}));
  Json j;
  j["elements"] = std::move(elements);
  j["covers"] = std::move(covers);
  return j;
}

inline std::string poset_to_dot(const FinitePoset& p) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(p.size()));
  for (const OrbitIndex& o : p.elements())
    labels.push_back(poset_element_to_json(o).dump());
  return p.export_dot(labels);
}

inline constexpr const char* kDominanceProjectionNote =
    "dominance projection, not asserted to be the closure order";

inline Json dominance_projection_to_json(const DominanceProjection& proj) {
  Json j;
  j["note"] = kDominanceProjectionNote;
  Json elements = Json::array();
  for (const Partition& lam : proj.elements) elements.push_back(partition_to_json(lam));
  j["elements"] = std::move(elements);
  Json covers = Json::array();
  for (const auto& [upper, lower] : proj.covers)
    covers.push_back(Json::array({upper, lower}));
  j["covers"] = std::move(covers);
  return j;
}

inline std::string dominance_projection_to_dot(const DominanceProjection& proj) {
  std::string out = "// ";
  out += kDominanceProjectionNote;
  out += "\ndigraph poset {\n";
  for (std::size_t i = 0; i < proj.elements.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" +
           partition_to_json(proj.elements[i]).dump() + "\"];\n";
  }
  for (const auto& [upper, lower] : proj.covers)
    out += "  n" + std::to_string(upper) + " -> n" + std::to_string(lower) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace nilorb
