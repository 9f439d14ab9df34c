#pragma once

// JSON interchange format for FloorPlanIR.
//
//   {
//     "ir_version": 1,
//     "rooms": [{"id": 1, "area": 5120, "centroid": [240, 310]}, ...],
//     "doors": [{"center": [402, 180], "orientation": "vertical", "rooms": [1, 2]}, ...],
//     "edges": [[1, 2], ...],
//     "violations": [{"rule": 7, "description": "...", "location": [x, y] | null}, ...]
//   }

#include <blueprint/ir.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace blueprint {

inline constexpr int kIrVersion = 1;

inline nlohmann::json point_to_json(Point p) { return nlohmann::json::array({p.x, p.y}); }

inline nlohmann::json violation_to_json(const RuleViolation& v) {
  nlohmann::json j;
  j["rule"] = v.rule;
  j["description"] = v.description;
  j["location"] = v.location ? point_to_json(*v.location) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json to_json(const FloorPlanIR& ir) {
  nlohmann::json j;
  j["ir_version"] = kIrVersion;
  j["rooms"] = nlohmann::json::array();
  for (const RoomEntry& r : ir.rooms)
    j["rooms"].push_back({{"id", r.rank}, {"area", r.area}, {"centroid", point_to_json(r.centroid)}});
  j["doors"] = nlohmann::json::array();
  for (const DoorEntry& d : ir.doors)
    j["doors"].push_back(
        {{"center", point_to_json(d.center)}, {"orientation", to_string(d.orientation)}, {"rooms", d.rooms}});
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : ir.edges) j["edges"].push_back({e.a, e.b});
  j["violations"] = nlohmann::json::array();
  for (const RuleViolation& v : ir.violations) j["violations"].push_back(violation_to_json(v));
  return j;
}

inline std::string serialize(const FloorPlanIR& ir, int indent = 2) { return to_json(ir).dump(indent) + "\n"; }

namespace ir_detail {

[[noreturn]] inline void malformed(const std::string& msg) { throw IrError(IrErrorCode::Malformed, msg); }

inline const nlohmann::json& field(const nlohmann::json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) malformed(std::string("missing field '") + name + "'");
  return obj.at(name);
}

inline std::int64_t integer(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string("'") + what + "' must be an integer");
  return j.get<std::int64_t>();
}

inline Point point(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) malformed(std::string("'") + what + "' must be an [x, y] pair");
  return {static_cast<int>(integer(j[0], what)), static_cast<int>(integer(j[1], what))};
}

}  // namespace ir_detail

inline RuleViolation violation_from_json(const nlohmann::json& v) {
  using namespace ir_detail;
  RuleViolation out;
  out.rule = static_cast<int>(integer(field(v, "rule"), "rule"));
  const auto& desc = field(v, "description");
  if (!desc.is_string()) malformed("'description' must be a string");
  out.description = desc.get<std::string>();
  if (v.contains("location") && !v.at("location").is_null()) out.location = point(v.at("location"), "location");
  return out;
}

/// Parse and validate an interchange document. The result is canonical.
inline FloorPlanIR from_json(const nlohmann::json& j) {
  using namespace ir_detail;
  if (!j.is_object()) malformed("document must be a JSON object");
  if (integer(field(j, "ir_version"), "ir_version") != kIrVersion)
    malformed("unsupported ir_version (expected " + std::to_string(kIrVersion) + ")");
  FloorPlanIR ir;
  const auto& rooms = field(j, "rooms");
  if (!rooms.is_array()) malformed("'rooms' must be an array");
  for (const auto& r : rooms) {
    RoomEntry e;
    e.rank = static_cast<int>(integer(field(r, "id"), "id"));
    e.area = integer(field(r, "area"), "area");
    e.centroid = point(field(r, "centroid"), "centroid");
    ir.rooms.push_back(e);
  }
  const auto& doors = field(j, "doors");
  if (!doors.is_array()) malformed("'doors' must be an array");
  for (const auto& d : doors) {
    DoorEntry e;
    e.center = point(field(d, "center"), "center");
    const auto& o = field(d, "orientation");
    if (o == "horizontal") e.orientation = Orientation::Horizontal;
    else if (o == "vertical") e.orientation = Orientation::Vertical;
    else malformed("'orientation' must be \"horizontal\" or \"vertical\"");
    const auto& rs = field(d, "rooms");
    if (!rs.is_array()) malformed("door 'rooms' must be an array");
    for (const auto& r : rs) e.rooms.push_back(static_cast<int>(integer(r, "rooms")));
    ir.doors.push_back(std::move(e));
  }
  const auto& edges = field(j, "edges");
  if (!edges.is_array()) malformed("'edges' must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) malformed("each edge must be a [a, b] pair");
    ir.edges.push_back(Edge::of(static_cast<int>(integer(e[0], "edges")), static_cast<int>(integer(e[1], "edges"))));
  }
  if (j.contains("violations")) {
    const auto& vs = j.at("violations");
    if (!vs.is_array()) malformed("'violations' must be an array");
    for (const auto& v : vs) ir.violations.push_back(violation_from_json(v));
  }
  ir = canonical(std::move(ir));
  // Sorting by rank keeps gaps and duplicates visible to the rank check.
  check_invariants(ir);
  return ir;
}

inline FloorPlanIR deserialize(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw IrError(IrErrorCode::Malformed, std::string("not valid JSON: ") + e.what());
  }
  return from_json(j);
}

}  // namespace blueprint
