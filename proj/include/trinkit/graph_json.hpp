#pragma once

// JSON reading and writing for rotation graphs.

#include <string>

#include "json.hpp"
#include "trinkit/plane_graph.hpp"

namespace trinkit {

using json = nlohmann::json;

namespace detail {

inline const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    throw SchemaError(where + ": missing field '" + key + "'");
  return obj.at(key);
}

inline std::string require_string(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_string()) throw SchemaError(where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace detail

inline GraphSpec parse_graph_spec(const json& doc) {
  if (!doc.is_object()) throw SchemaError("graph document must be an object");
  GraphSpec s;
  const json& vs = detail::require(doc, "vertices", "graph");
  const json& es = detail::require(doc, "edges", "graph");
  if (!vs.is_array()) throw SchemaError("graph: 'vertices' must be an array");
  if (!es.is_array()) throw SchemaError("graph: 'edges' must be an array");
  for (const auto& v : vs) {
    GraphSpec::Vertex rec;
    rec.id = detail::require_string(v, "id", "vertex");
    const std::string where = "vertex '" + rec.id + "'";
    if (v.contains("colour") && !v.at("colour").is_null()) {
      if (!v.at("colour").is_string()) throw SchemaError(where + ": colour must be a string or null");
      auto c = parse_colour(v.at("colour").get<std::string>());
      if (!c) throw SchemaError(where + ": unknown colour '" + v.at("colour").get<std::string>() + "'");
      rec.colour = *c;
    }
    const json& rot = detail::require(v, "rotation", where);
    if (!rot.is_array()) throw SchemaError(where + ": rotation must be an array");
    for (const auto& d : rot) {
      if (!d.is_string()) throw SchemaError(where + ": dart ids must be strings");
      rec.rotation.push_back(d.get<std::string>());
    }
    s.vertices.push_back(std::move(rec));
  }
  for (const auto& e : es) {
    GraphSpec::Edge rec;
    rec.id = detail::require_string(e, "id", "edge");
    const json& ds = detail::require(e, "darts", "edge '" + rec.id + "'");
    if (!ds.is_array() || ds.size() != 2 || !ds[0].is_string() || !ds[1].is_string())
      throw SchemaError("edge '" + rec.id + "': darts must be two strings");
    rec.darts = {ds[0].get<std::string>(), ds[1].get<std::string>()};
    s.edges.push_back(std::move(rec));
  }
  // Optional face names; boundaries only need to list one dart each.
  if (doc.contains("faces")) {
    const json& fs = doc.at("faces");
    if (!fs.is_array()) throw SchemaError("graph: 'faces' must be an array");
    for (const auto& f : fs) {
      const std::string id = detail::require_string(f, "id", "face");
      const json& b = detail::require(f, "boundary", "face '" + id + "'");
      if (!b.is_array()) throw SchemaError("face '" + id + "': boundary must be an array");
      for (const auto& d : b) {
        if (!d.is_string()) throw SchemaError("face '" + id + "': dart ids must be strings");
        s.face_names[d.get<std::string>()] = id;
      }
    }
  }
  return s;
}

/// Parses and validates a graph document.
inline RotationGraph parse_graph(const json& doc) { return RotationGraph::build(parse_graph_spec(doc)); }

inline RotationGraph parse_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  return parse_graph(doc);
}

/// Graph schema document. With `with_faces`, a derived "faces" list is added.
inline json graph_to_json(const RotationGraph& g, bool with_faces = false) {
  json vs = json::array();
  for (const auto& v : g.vertices()) {
    json rot = json::array();
    for (int d : v.rotation) rot.push_back(g.dart(d).id);
    json c = v.colour == Colour::none ? json(nullptr) : json(colour_name(v.colour));
    vs.push_back({{"id", v.id}, {"colour", c}, {"rotation", rot}});
  }
  json es = json::array();
  for (const auto& e : g.edges())
    es.push_back({{"id", e.id}, {"darts", {g.dart(e.darts[0]).id, g.dart(e.darts[1]).id}}});
  json doc = {{"vertices", vs}, {"edges", es}};
  if (with_faces) {
    json fs = json::array();
    for (const auto& f : g.faces()) {
      json b = json::array();
      for (int d : f.boundary) b.push_back(g.dart(d).id);
      fs.push_back({{"id", f.id}, {"boundary", b}});
    }
    doc["faces"] = fs;
  }
  return doc;
}

}  // namespace trinkit
