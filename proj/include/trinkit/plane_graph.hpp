#pragma once

// Plane multigraphs encoded as rotation systems.
//
// Every edge owns two darts (half-edges). A dart is anchored at one vertex and
// points along its edge; each vertex lists its darts in counterclockwise order.
// Faces are traced with the face on the left: after traversing dart d into
// vertex w we continue with the clockwise neighbour of twin(d) at w, i.e.
// face_next(d) = rot_prev(twin(d)).

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trinkit/errors.hpp"

namespace trinkit {

enum class Colour { none, violet, emerald, red };

inline const char* colour_name(Colour c) {
  switch (c) {
    case Colour::violet: return "violet";
    case Colour::emerald: return "emerald";
    case Colour::red: return "red";
    case Colour::none: break;
  }
  return "none";
}

inline std::optional<Colour> parse_colour(const std::string& s) {
  if (s == "violet") return Colour::violet;
  if (s == "emerald") return Colour::emerald;
  if (s == "red") return Colour::red;
  if (s == "none") return Colour::none;
  return std::nullopt;
}

/// Plain description of an embedded graph, as read from or written to JSON.
struct GraphSpec {
  struct Vertex {
    std::string id;
    Colour colour = Colour::none;
    std::vector<std::string> rotation;  // dart ids, counterclockwise
  };
  struct Edge {
    std::string id;
    std::array<std::string, 2> darts;
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  // Optional face naming: any dart id -> name of the face it bounds.
  std::map<std::string, std::string> face_names;
};

class RotationGraph {
 public:
  struct Vertex {
    std::string id;
    Colour colour = Colour::none;
    std::vector<int> rotation;
  };
  struct Edge {
    std::string id;
    std::array<int, 2> darts{};
  };
  struct Dart {
    std::string id;
    int vertex = -1;
    int edge = -1;
    int rot_pos = -1;  // index inside the owning vertex rotation
  };
  struct Face {
    std::string id;
    std::vector<int> boundary;  // darts in trace order, face on the left
  };

  RotationGraph() = default;

  /// Validates the rotation system and traces faces.
  /// Throws SchemaError, NotConnected or NotPlanarConsistent.
  static RotationGraph build(const GraphSpec& spec) {
    RotationGraph g;
    std::unordered_map<std::string, int> vertex_ids;
    g.vertices_.reserve(spec.vertices.size());
    for (const auto& v : spec.vertices) {
      if (v.id.empty()) throw SchemaError("vertex with empty id");
      if (!vertex_ids.emplace(v.id, static_cast<int>(g.vertices_.size())).second)
        throw SchemaError("duplicate vertex id '" + v.id + "'");
      Vertex rec;
      rec.id = v.id;
      rec.colour = v.colour;
      for (const auto& dart_id : v.rotation) {
        if (g.dart_index_.count(dart_id))
          throw SchemaError("dart '" + dart_id + "' appears in more than one rotation");
        int d = static_cast<int>(g.darts_.size());
        g.dart_index_.emplace(dart_id, d);
        g.darts_.push_back(Dart{dart_id, static_cast<int>(g.vertices_.size()), -1,
                                static_cast<int>(rec.rotation.size())});
        rec.rotation.push_back(d);
      }
      g.vertices_.push_back(std::move(rec));
    }
    if (g.vertices_.empty()) throw SchemaError("graph has no vertices");

    for (const auto& e : spec.edges) {
      if (e.id.empty()) throw SchemaError("edge with empty id");
      if (g.edge_index_.count(e.id)) throw SchemaError("duplicate edge id '" + e.id + "'");
      Edge rec;
      rec.id = e.id;
      for (int k = 0; k < 2; ++k) {
        auto it = g.dart_index_.find(e.darts[static_cast<std::size_t>(k)]);
        if (it == g.dart_index_.end())
          throw SchemaError("edge '" + e.id + "' references unknown dart '" +
                            e.darts[static_cast<std::size_t>(k)] + "'");
        Dart& dart = g.darts_[static_cast<std::size_t>(it->second)];
        if (dart.edge != -1)
          throw SchemaError("dart '" + dart.id + "' belongs to more than one edge");
        dart.edge = static_cast<int>(g.edges_.size());
        rec.darts[static_cast<std::size_t>(k)] = it->second;
      }
      if (rec.darts[0] == rec.darts[1])
        throw SchemaError("edge '" + e.id + "' uses the same dart twice");
      g.edge_index_.emplace(e.id, static_cast<int>(g.edges_.size()));
      g.edges_.push_back(std::move(rec));
    }
    for (const auto& d : g.darts_)
      if (d.edge == -1) throw SchemaError("dart '" + d.id + "' belongs to no edge");
    for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
      g.vertex_index_.emplace(g.vertices_[i].id, static_cast<int>(i));
      if (g.vertices_[i].rotation.empty() && g.vertices_.size() > 1)
        throw NotConnected("vertex '" + g.vertices_[i].id + "' is isolated");
    }
    if (g.edges_.empty()) throw SchemaError("graph has no edges");
    if (!g.is_connected()) throw NotConnected("graph is not connected");
    g.trace_faces(spec.face_names);
    const long long euler = static_cast<long long>(g.vertices_.size()) -
                            static_cast<long long>(g.edges_.size()) +
                            static_cast<long long>(g.faces_.size());
    if (euler != 2)
      throw NotPlanarConsistent("face trace gives V - E + F = " + std::to_string(euler) +
                                ", expected 2");
    return g;
  }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_darts() const { return darts_.size(); }
  std::size_t num_faces() const { return faces_.size(); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Dart>& darts() const { return darts_; }
  const std::vector<Face>& faces() const { return faces_; }

  const Vertex& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const Dart& dart(int d) const { return darts_[static_cast<std::size_t>(d)]; }
  const Face& face(int f) const { return faces_[static_cast<std::size_t>(f)]; }

  int twin(int d) const {
    const Edge& e = edge(dart(d).edge);
    return e.darts[0] == d ? e.darts[1] : e.darts[0];
  }
  int tail(int d) const { return dart(d).vertex; }
  int head(int d) const { return dart(twin(d)).vertex; }
  int rot_next(int d) const {
    const auto& rot = vertex(dart(d).vertex).rotation;
    return rot[(static_cast<std::size_t>(dart(d).rot_pos) + 1) % rot.size()];
  }
  int rot_prev(int d) const {
    const auto& rot = vertex(dart(d).vertex).rotation;
    return rot[(static_cast<std::size_t>(dart(d).rot_pos) + rot.size() - 1) % rot.size()];
  }
  int face_next(int d) const { return rot_prev(twin(d)); }
  int face_of(int d) const { return dart_face_[static_cast<std::size_t>(d)]; }
  int pos_in_face(int d) const { return dart_face_pos_[static_cast<std::size_t>(d)]; }
  std::size_t degree(int v) const { return vertex(v).rotation.size(); }
  bool is_loop(int e) const { return tail(edge(e).darts[0]) == tail(edge(e).darts[1]); }

  /// Face containing the corner between rotation darts k and k+1 at v.
  int corner_face(int v, int k) const {
    const auto& rot = vertex(v).rotation;
    return face_of(rot[static_cast<std::size_t>(k) % rot.size()]);
  }

  std::optional<int> find_vertex(const std::string& id) const { return lookup(vertex_index_, id); }
  std::optional<int> find_edge(const std::string& id) const { return lookup(edge_index_, id); }
  std::optional<int> find_dart(const std::string& id) const { return lookup(dart_index_, id); }
  std::optional<int> find_face(const std::string& id) const { return lookup(face_index_, id); }

  GraphSpec to_spec() const {
    GraphSpec s;
    for (const auto& v : vertices_) {
      GraphSpec::Vertex sv{v.id, v.colour, {}};
      for (int d : v.rotation) sv.rotation.push_back(dart(d).id);
      s.vertices.push_back(std::move(sv));
    }
    for (const auto& e : edges_)
      s.edges.push_back(GraphSpec::Edge{e.id, {dart(e.darts[0]).id, dart(e.darts[1]).id}});
    for (const auto& f : faces_)
      for (int d : f.boundary) s.face_names[dart(d).id] = f.id;
    return s;
  }

  /// Copy with vertex colours replaced (vertex id -> colour).
  RotationGraph recoloured(const std::map<std::string, Colour>& colours) const {
    GraphSpec s = to_spec();
    for (auto& v : s.vertices) {
      auto it = colours.find(v.id);
      if (it != colours.end()) v.colour = it->second;
    }
    return build(s);
  }

 private:
  static std::optional<int> lookup(const std::unordered_map<std::string, int>& m,
                                   const std::string& id) {
    auto it = m.find(id);
    if (it == m.end()) return std::nullopt;
    return it->second;
  }

  bool is_connected() const {
    std::vector<char> seen(vertices_.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int d : vertex(v).rotation) {
        int w = head(d);
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == vertices_.size();
  }

  void trace_faces(const std::map<std::string, std::string>& names) {
    // Darts in lexicographic id order; each untraced dart starts a new face, so
    // every face starts at its lexicographically smallest dart.
    std::vector<int> order(darts_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return dart(a).id < dart(b).id; });
    dart_face_.assign(darts_.size(), -1);
    dart_face_pos_.assign(darts_.size(), -1);
    for (int start : order) {
      if (dart_face_[static_cast<std::size_t>(start)] != -1) continue;
      Face f;
      int d = start;
      const int fi = static_cast<int>(faces_.size());
      do {
        if (dart_face_[static_cast<std::size_t>(d)] != -1)
          throw NotPlanarConsistent("face trace revisits dart '" + dart(d).id + "'");
        dart_face_[static_cast<std::size_t>(d)] = fi;
        dart_face_pos_[static_cast<std::size_t>(d)] = static_cast<int>(f.boundary.size());
        f.boundary.push_back(d);
        d = face_next(d);
      } while (d != start);
      f.id = "f" + std::to_string(fi);
      if (!names.empty()) {
        std::optional<std::string> name;
        for (int b : f.boundary) {
          auto it = names.find(dart(b).id);
          if (it == names.end()) continue;
          if (name && *name != it->second)
            throw SchemaError("face naming is inconsistent along face '" + *name + "'");
          name = it->second;
        }
        if (name) f.id = *name;
      }
      faces_.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < faces_.size(); ++i)
      if (!face_index_.emplace(faces_[i].id, static_cast<int>(i)).second)
        throw SchemaError("duplicate face id '" + faces_[i].id + "'");
  }

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Dart> darts_;
  std::vector<Face> faces_;
  std::vector<int> dart_face_;
  std::vector<int> dart_face_pos_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> edge_index_;
  std::unordered_map<std::string, int> dart_index_;
  std::unordered_map<std::string, int> face_index_;
};

/// Dual graph: one vertex per face (named after the face), one edge per primal
/// edge (same id). The dual dart of primal dart d is "<d>*"; it sits at the
/// face left of d, crosses d's edge, and the dual rotation at a face follows the
/// face boundary. Dual faces are named after the primal vertex they surround.
inline RotationGraph planar_dual(const RotationGraph& g) {
  GraphSpec s;
  for (const auto& f : g.faces()) {
    GraphSpec::Vertex v{f.id, Colour::none, {}};
    for (int d : f.boundary) v.rotation.push_back(g.dart(d).id + "*");
    s.vertices.push_back(std::move(v));
  }
  for (const auto& e : g.edges())
    s.edges.push_back(GraphSpec::Edge{
        e.id, {g.dart(e.darts[0]).id + "*", g.dart(e.darts[1]).id + "*"}});
  for (std::size_t d = 0; d < g.num_darts(); ++d) {
    const int di = static_cast<int>(d);
    s.face_names[g.dart(di).id + "*"] = g.vertex(g.head(di)).id;
  }
  return RotationGraph::build(s);
}

/// Orientation-preserving canonical code: lexicographic minimum, over all
/// starting darts, of the BFS relabelling of (rot_next, twin[, colour]).
inline std::vector<int> canonical_code(const RotationGraph& g, bool with_colours = true) {
  const int n = static_cast<int>(g.num_darts());
  std::vector<int> best;
  std::vector<int> label(static_cast<std::size_t>(n));
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int start = 0; start < n; ++start) {
    std::fill(label.begin(), label.end(), -1);
    order.clear();
    label[static_cast<std::size_t>(start)] = 0;
    order.push_back(start);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const int d = order[head];
      for (int nb : {g.rot_next(d), g.twin(d)}) {
        if (label[static_cast<std::size_t>(nb)] == -1) {
          label[static_cast<std::size_t>(nb)] = static_cast<int>(order.size());
          order.push_back(nb);
        }
      }
    }
    std::vector<int> code;
    code.reserve(static_cast<std::size_t>(3 * n + 1));
    code.push_back(n);
    for (int d : order) {
      code.push_back(label[static_cast<std::size_t>(g.rot_next(d))]);
      code.push_back(label[static_cast<std::size_t>(g.twin(d))]);
      if (with_colours) code.push_back(static_cast<int>(g.vertex(g.tail(d)).colour));
    }
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

inline bool isomorphic(const RotationGraph& a, const RotationGraph& b, bool with_colours = true) {
  if (a.num_darts() != b.num_darts() || a.num_vertices() != b.num_vertices()) return false;
  return canonical_code(a, with_colours) == canonical_code(b, with_colours);
}

struct ValidationReport {
  bool connected = true;
  bool loop_free = true;
  bool bipartite = true;
  bool colours_consistent = true;
  std::size_t violet_count = 0;
  std::size_t emerald_count = 0;
  std::vector<std::string> problems;
  // Proper 2-colouring (given where present, computed elsewhere); empty if none.
  std::map<std::string, Colour> colouring;

  bool ok() const { return connected && loop_free && bipartite && colours_consistent; }
};

/// Checks that the graph is a connected, loop-free, properly 2-coloured plane
/// graph. Never throws; failures are listed in the report.
inline ValidationReport validate_bipartite_plane(const RotationGraph& g) {
  ValidationReport r;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (g.is_loop(static_cast<int>(e))) {
      r.loop_free = false;
      r.problems.push_back("loop edge '" + g.edge(static_cast<int>(e)).id + "'");
    }
  }
  const std::size_t nv = g.num_vertices();
  std::vector<int> side(nv, -1);  // 0 violet, 1 emerald
  for (std::size_t v = 0; v < nv; ++v) {
    Colour c = g.vertex(static_cast<int>(v)).colour;
    if (c == Colour::violet) side[v] = 0;
    if (c == Colour::emerald) side[v] = 1;
    if (c == Colour::red) {
      r.colours_consistent = false;
      r.problems.push_back("vertex '" + g.vertex(static_cast<int>(v)).id +
                           "' is red; expected violet or emerald");
    }
  }
  // Seed BFS from coloured vertices first so given colours win.
  std::vector<int> seeds;
  for (std::size_t v = 0; v < nv; ++v)
    if (side[v] != -1) seeds.push_back(static_cast<int>(v));
  if (seeds.empty()) {
    side[0] = 0;
    seeds.push_back(0);
  }
  std::vector<char> visited(nv, 0);
  std::queue<int> q;
  for (int s : seeds) {
    visited[static_cast<std::size_t>(s)] = 1;
    q.push(s);
  }
  bool odd_cycle = false;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int d : g.vertex(v).rotation) {
      int w = g.head(d);
      if (w == v) continue;
      auto& sw = side[static_cast<std::size_t>(w)];
      const int want = 1 - side[static_cast<std::size_t>(v)];
      if (sw == -1) {
        sw = want;
      } else if (sw != want) {
        odd_cycle = true;
      }
      if (!visited[static_cast<std::size_t>(w)]) {
        visited[static_cast<std::size_t>(w)] = 1;
        q.push(w);
      }
    }
  }
  if (odd_cycle) {
    r.bipartite = false;
    bool given = std::any_of(g.vertices().begin(), g.vertices().end(),
                             [](const auto& v) { return v.colour != Colour::none; });
    r.problems.push_back(given ? "not bipartite: an edge joins two vertices of the same colour"
                               : "not bipartite: odd cycle");
  }
  if (r.ok()) {
    for (std::size_t v = 0; v < nv; ++v) {
      Colour c = side[v] == 0 ? Colour::violet : Colour::emerald;
      r.colouring[g.vertex(static_cast<int>(v)).id] = c;
      (side[v] == 0 ? r.violet_count : r.emerald_count)++;
    }
  }
  return r;
}

/// Returns the graph with a complete violet/emerald colouring.
/// Throws NotBipartite when validation fails.
inline RotationGraph with_bipartite_colours(const RotationGraph& g) {
  ValidationReport r = validate_bipartite_plane(g);
  if (!r.ok()) {
    std::string msg;
    for (const auto& p : r.problems) msg += (msg.empty() ? "" : "; ") + p;
    throw NotBipartite(msg);
  }
  return g.recoloured(r.colouring);
}

}  // namespace trinkit
