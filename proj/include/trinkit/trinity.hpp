#pragma once

// Trinity of a plane bipartite graph G: violet and emerald vertices of G, one
// red vertex per face, and the triangulation they span.
//
// Triangles are corner incidences: the triangle (face r, dart d) has corners
// tail(d), head(d) and r. It is black when tail(d) is emerald, white when
// tail(d) is violet, so every edge of G bounds one of each.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "trinkit/plane_graph.hpp"

namespace trinkit {

enum class Shade { black, white };

struct Triangle {
  int v = -1;  // violet vertex of G
  int e = -1;  // emerald vertex of G
  int r = -1;  // face of G
  int dart = -1;
  Shade shade = Shade::black;
};

/// Colour graph dual with every arc pointing from its black to its white
/// triangle. Vertex indices refer to `vertices`.
struct DirectedDual {
  struct Arc {
    std::string id;
    int tail = -1;
    int head = -1;
  };
  Colour colour = Colour::none;
  std::vector<std::string> vertices;
  std::vector<Arc> arcs;

  int index_of(const std::string& id) const {
    auto it = std::find(vertices.begin(), vertices.end(), id);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
  }
  std::vector<int> out_degrees() const {
    std::vector<int> out(vertices.size(), 0);
    for (const auto& a : arcs) ++out[static_cast<std::size_t>(a.tail)];
    return out;
  }
  std::vector<int> in_degrees() const {
    std::vector<int> in(vertices.size(), 0);
    for (const auto& a : arcs) ++in[static_cast<std::size_t>(a.head)];
    return in;
  }
  bool balanced() const { return out_degrees() == in_degrees(); }
  std::string min_vertex() const { return *std::min_element(vertices.begin(), vertices.end()); }
};

struct Trinity {
  RotationGraph g;  // coloured input; also the red colour graph
  std::vector<int> violet;   // vertex indices of g
  std::vector<int> emerald;  // vertex indices of g
  std::vector<Triangle> triangles;
  RotationGraph gv;  // emerald + red vertices
  RotationGraph ge;  // red + violet vertices
  DirectedDual dual_v, dual_e, dual_r;

  std::size_t n() const { return g.num_edges(); }
  std::size_t num_V() const { return violet.size(); }
  std::size_t num_E() const { return emerald.size(); }
  std::size_t num_R() const { return g.num_faces(); }
  int n_r(int face) const { return static_cast<int>(g.face(face).boundary.size() / 2); }
  bool is_violet(int vertex) const { return g.vertex(vertex).colour == Colour::violet; }
  bool is_emerald(int vertex) const { return g.vertex(vertex).colour == Colour::emerald; }

  /// Face indices of g in sorted face-id order.
  std::vector<int> faces_by_id() const {
    std::vector<int> out(g.num_faces());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
    std::sort(out.begin(), out.end(),
              [&](int a, int b) { return g.face(a).id < g.face(b).id; });
    return out;
  }
};

namespace detail {

// Colour graph on `corner_colour` vertices and faces; one edge per corner of G
// at a `corner_colour` vertex. `prefix` tags the generated ids.
inline RotationGraph corner_graph(const RotationGraph& g, Colour corner_colour,
                                  const std::string& prefix) {
  GraphSpec s;
  auto corner_dart = [&](int arriving, const char* end) {
    return prefix + g.dart(arriving).id + end;
  };
  for (const auto& v : g.vertices()) {
    if (v.colour != corner_colour) continue;
    GraphSpec::Vertex rec{v.id, corner_colour, {}};
    const std::size_t deg = v.rotation.size();
    for (std::size_t k = 0; k < deg; ++k)
      rec.rotation.push_back(corner_dart(g.twin(v.rotation[(k + 1) % deg]), ":x"));
    s.vertices.push_back(std::move(rec));
  }
  for (const auto& f : g.faces()) {
    GraphSpec::Vertex rec{f.id, Colour::red, {}};
    for (int d : f.boundary)
      if (g.vertex(g.head(d)).colour == corner_colour) rec.rotation.push_back(corner_dart(d, ":r"));
    s.vertices.push_back(std::move(rec));
  }
  for (std::size_t i = 0; i < g.num_darts(); ++i) {
    const int d = static_cast<int>(i);
    if (g.vertex(g.head(d)).colour != corner_colour) continue;
    s.edges.push_back(GraphSpec::Edge{prefix + g.dart(d).id, {corner_dart(d, ":r"), corner_dart(d, ":x")}});
    // Faces of the colour graph hold the opposite-colour vertices of G.
    s.face_names[corner_dart(d, ":r")] = g.vertex(g.head(g.face_next(d))).id;
    s.face_names[corner_dart(d, ":x")] = g.vertex(g.tail(d)).id;
  }
  return RotationGraph::build(s);
}

}  // namespace detail

/// Builds the trinity. Colours are validated (and completed when absent);
/// throws NotBipartite for graphs with loops or odd cycles.
inline Trinity build_trinity(const RotationGraph& input) {
  Trinity t;
  t.g = with_bipartite_colours(input);
  const RotationGraph& g = t.g;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    (t.is_violet(static_cast<int>(v)) ? t.violet : t.emerald).push_back(static_cast<int>(v));

  for (std::size_t f = 0; f < g.num_faces(); ++f) {
    for (int d : g.face(static_cast<int>(f)).boundary) {
      Triangle tri;
      tri.r = static_cast<int>(f);
      tri.dart = d;
      const bool tail_emerald = t.is_emerald(g.tail(d));
      tri.e = tail_emerald ? g.tail(d) : g.head(d);
      tri.v = tail_emerald ? g.head(d) : g.tail(d);
      tri.shade = tail_emerald ? Shade::black : Shade::white;
      t.triangles.push_back(tri);
    }
  }

  t.gv = detail::corner_graph(g, Colour::emerald, "gv:");
  t.ge = detail::corner_graph(g, Colour::violet, "ge:");

  // G_V*: at an emerald corner, from the violet after it to the violet before it.
  t.dual_v.colour = Colour::violet;
  for (int v : t.violet) t.dual_v.vertices.push_back(g.vertex(v).id);
  // G_E*: at a violet corner, from the emerald before it to the emerald after it.
  t.dual_e.colour = Colour::emerald;
  for (int e : t.emerald) t.dual_e.vertices.push_back(g.vertex(e).id);
  auto pos = [](const std::vector<int>& xs, int x) {
    return static_cast<int>(std::find(xs.begin(), xs.end(), x) - xs.begin());
  };
  for (std::size_t i = 0; i < g.num_darts(); ++i) {
    const int d = static_cast<int>(i);
    const int after = g.head(g.face_next(d));
    if (t.is_emerald(g.head(d))) {
      t.dual_v.arcs.push_back({"gv:" + g.dart(d).id, pos(t.violet, after), pos(t.violet, g.tail(d))});
    } else {
      t.dual_e.arcs.push_back({"ge:" + g.dart(d).id, pos(t.emerald, g.tail(d)), pos(t.emerald, after)});
    }
  }
  // G_R*: across each edge, from the face left of its emerald-to-violet dart.
  t.dual_r.colour = Colour::red;
  for (const auto& f : g.faces()) t.dual_r.vertices.push_back(f.id);
  for (const auto& e : g.edges()) {
    const int d = t.is_emerald(g.tail(e.darts[0])) ? e.darts[0] : e.darts[1];
    t.dual_r.arcs.push_back({e.id, g.face_of(d), g.face_of(g.twin(d))});
  }
  return t;
}

inline const RotationGraph& colour_graph(const Trinity& t, Colour c) {
  switch (c) {
    case Colour::violet: return t.gv;
    case Colour::emerald: return t.ge;
    case Colour::red: return t.g;
    case Colour::none: break;
  }
  throw SchemaError("colour graph requires violet, emerald or red");
}

inline const DirectedDual& directed_dual(const Trinity& t, Colour c) {
  switch (c) {
    case Colour::violet: return t.dual_v;
    case Colour::emerald: return t.dual_e;
    case Colour::red: return t.dual_r;
    case Colour::none: break;
  }
  throw SchemaError("directed dual requires violet, emerald or red");
}

struct Census {
  std::size_t V = 0, E = 0, R = 0, n = 0;
  std::map<std::string, int> n_r;
  bool vertex_identity = false;  // |V| + |E| + |R| = n + 2
  bool incidence_identity = false;  // sum of n_r = n
  bool euler_ok() const { return vertex_identity && incidence_identity; }
};

inline Census trinity_census(const Trinity& t) {
  Census c;
  c.V = t.num_V();
  c.E = t.num_E();
  c.R = t.num_R();
  c.n = t.n();
  std::size_t sum = 0;
  for (std::size_t f = 0; f < t.num_R(); ++f) {
    const int nr = t.n_r(static_cast<int>(f));
    c.n_r[t.g.face(static_cast<int>(f)).id] = nr;
    sum += static_cast<std::size_t>(nr);
  }
  c.vertex_identity = c.V + c.E + c.R == c.n + 2;
  c.incidence_identity = sum == c.n;
  return c;
}

}  // namespace trinkit
