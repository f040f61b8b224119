#pragma once

// Built-in graph families and named fixtures.

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trinkit/fkt.hpp"
#include "trinkit/plane_graph.hpp"

namespace trinkit {

namespace detail {

// Graph given by vertices and, per edge, the departure angle (degrees) at each
// end; rotations are sorted counterclockwise by angle.
class AngleBuilder {
 public:
  void vertex(const std::string& id, Colour c) {
    index_[id] = spec_.vertices.size();
    spec_.vertices.push_back({id, c, {}});
    slots_.emplace_back();
  }
  void edge(const std::string& id, const std::string& a, double angle_a, const std::string& b, double angle_b) {
    const std::string da = id + ".0", db = id + ".1";
    slots_[index_.at(a)].emplace_back(norm(angle_a), da);
    slots_[index_.at(b)].emplace_back(norm(angle_b), db);
    spec_.edges.push_back({id, {da, db}});
  }
  GraphSpec spec() {
    GraphSpec s = spec_;
    for (std::size_t v = 0; v < s.vertices.size(); ++v) {
      auto slots = slots_[v];
      std::stable_sort(slots.begin(), slots.end(),
                       [](const auto& x, const auto& y) { return x.first < y.first; });
      for (auto& [_, d] : slots) s.vertices[v].rotation.push_back(d);
    }
    return s;
  }

 private:
  static double norm(double a) {
    a = std::fmod(a, 360.0);
    return a < 0 ? a + 360.0 : a;
  }
  GraphSpec spec_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<std::pair<double, std::string>>> slots_;
};

// Straight-line drawing from coordinates.
class PointBuilder {
 public:
  void vertex(const std::string& id, Colour c, double x, double y) {
    at_[id] = {x, y};
    b_.vertex(id, c);
  }
  void edge(const std::string& id, const std::string& a, const std::string& b) {
    const auto [ax, ay] = at_.at(a);
    const auto [bx, by] = at_.at(b);
    const double deg = 180.0 / std::acos(-1.0);
    b_.edge(id, a, std::atan2(by - ay, bx - ax) * deg, b, std::atan2(ay - by, ax - bx) * deg);
  }
  GraphSpec spec() { return b_.spec(); }

 private:
  AngleBuilder b_;
  std::map<std::string, std::pair<double, double>> at_;
};

inline std::string padded(const std::string& prefix, int k) {
  return prefix + (k < 10 ? "0" : "") + std::to_string(k);
}

inline Colour parity_colour(int k) { return k % 2 == 0 ? Colour::violet : Colour::emerald; }

inline std::string parity_id(int k, int serial) {
  return (k % 2 == 0 ? "v" : "e") + std::to_string(serial);
}

inline GraphSpec grid_spec(int w, int h) {
  PointBuilder b;
  auto id = [&](int x, int y) {
    return std::string((x + y) % 2 == 0 ? "v" : "e") + std::to_string(x) + "_" + std::to_string(y);
  };
  for (int y = 0; y <= h; ++y)
    for (int x = 0; x <= w; ++x) b.vertex(id(x, y), parity_colour(x + y), x, y);
  int k = 0;
  for (int y = 0; y <= h; ++y)
    for (int x = 0; x < w; ++x) b.edge(padded("x", ++k), id(x, y), id(x + 1, y));
  for (int y = 0; y < h; ++y)
    for (int x = 0; x <= w; ++x) b.edge(padded("x", ++k), id(x, y), id(x, y + 1));
  return b.spec();
}

}  // namespace detail

inline const std::vector<std::string>& corpus_families() {
  static const std::vector<std::string> f{"path", "even_cycle", "theta", "grid", "ladder"};
  return f;
}

/// Family instance: path k (k edges), even_cycle k (2k edges), theta k (k
/// subdivided parallel paths between two violet poles), grid k (k x k cells),
/// ladder k (1 x k cells). Throws UnknownFamily or CapExceeded.
inline GraphSpec generate_corpus_spec(const std::string& family, int size) {
  if (size < 1) throw SchemaError("family size must be at least 1");
  if (size > 200) throw CapExceeded("family size " + std::to_string(size) + " exceeds 200");
  detail::PointBuilder b;
  if (family == "path") {
    for (int i = 0; i <= size; ++i) b.vertex(detail::parity_id(i, i / 2), detail::parity_colour(i), i, 0);
    for (int i = 0; i < size; ++i)
      b.edge(detail::padded("x", i + 1), detail::parity_id(i, i / 2), detail::parity_id(i + 1, (i + 1) / 2));
    return b.spec();
  }
  if (family == "even_cycle") {
    if (size < 2) throw SchemaError("even_cycle needs size at least 2");
    const int m = 2 * size;
    const double step = 2 * std::acos(-1.0) / m;
    for (int i = 0; i < m; ++i)
      b.vertex(detail::parity_id(i, i / 2), detail::parity_colour(i), std::cos(i * step), std::sin(i * step));
    for (int i = 0; i < m; ++i)
      b.edge(detail::padded("x", i + 1), detail::parity_id(i, i / 2), detail::parity_id((i + 1) % m, ((i + 1) % m) / 2));
    return b.spec();
  }
  if (family == "theta") {
    if (size < 2) throw SchemaError("theta needs size at least 2");
    b.vertex("v0", Colour::violet, -1, 0);
    b.vertex("v1", Colour::violet, 1, 0);
    for (int i = 0; i < size; ++i) {
      const std::string m = "e" + std::to_string(i);
      b.vertex(m, Colour::emerald, 0, size - 1 - 2.0 * i);
      b.edge(detail::padded("x", 2 * i + 1), "v0", m);
      b.edge(detail::padded("x", 2 * i + 2), m, "v1");
    }
    return b.spec();
  }
  if (family == "grid") return detail::grid_spec(size, size);
  if (family == "ladder") return detail::grid_spec(size, 1);
  throw UnknownFamily("unknown family '" + family + "'");
}

inline RotationGraph generate_corpus(const std::string& family, int size) {
  return RotationGraph::build(generate_corpus_spec(family, size));
}

inline RotationGraph single_edge_graph() { return generate_corpus("path", 1); }
inline RotationGraph c4_graph() { return generate_corpus("even_cycle", 2); }

/// Uncoloured 3-cycle; not bipartite.
inline RotationGraph triangle_graph() {
  detail::PointBuilder b;
  b.vertex("a", Colour::none, 0, 0);
  b.vertex("b", Colour::none, 1, 0);
  b.vertex("c", Colour::none, 0, 1);
  b.edge("x01", "a", "b");
  b.edge("x02", "b", "c");
  b.edge("x03", "c", "a");
  return RotationGraph::build(b.spec());
}

/// 11-edge graph on five violet and four emerald vertices with faces of
/// half-lengths 2, 2, 3 and 4.
inline RotationGraph running_example_graph() {
  detail::AngleBuilder b;
  for (int i = 0; i < 5; ++i) b.vertex("v" + std::to_string(i), Colour::violet);
  for (int i = 0; i < 4; ++i) b.vertex("e" + std::to_string(i), Colour::emerald);
  b.edge("x01", "e1", 250, "v1", 70);
  b.edge("x02", "v1", 256, "e2", 76);
  b.edge("x03", "e2", 261.5, "v2", 81.5);
  b.edge("x04", "v2", 264, "e3", 84);
  b.edge("x05", "e0", 165, "v4", 0);
  b.edge("x06", "v4", 180, "e1", 10);
  b.edge("x07", "v0", 210, "e3", 200);
  b.edge("x08", "e1", 150, "v0", 330);
  b.edge("x09", "e3", 300, "v3", 210);
  b.edge("x10", "v3", 30, "e0", 300);
  b.edge("x11", "e0", 60, "v0", 60);
  return RotationGraph::build(b.spec());
}

/// Universe from a planar diagram code: each crossing lists its four strand
/// labels counterclockwise; each label occurs exactly twice. The stars are
/// the two faces on either side of the first strand at the first crossing.
inline Universe universe_from_pd(const std::vector<std::array<int, 4>>& pd) {
  GraphSpec s;
  std::map<int, std::vector<std::string>> slots;
  for (std::size_t c = 0; c < pd.size(); ++c) {
    const std::string id = "c" + std::to_string(c + 1);
    GraphSpec::Vertex v{id, Colour::none, {}};
    for (std::size_t j = 0; j < 4; ++j) {
      const std::string d = id + "." + std::to_string(j);
      v.rotation.push_back(d);
      slots[pd[c][j]].push_back(d);
    }
    s.vertices.push_back(std::move(v));
  }
  for (const auto& [label, darts] : slots) {
    if (darts.size() != 2) throw SchemaError("strand " + std::to_string(label) + " must occur twice");
    s.edges.push_back({"s" + std::to_string(label), {darts[0], darts[1]}});
  }
  RotationGraph g = RotationGraph::build(s);
  const int d = g.vertex(0).rotation[0];
  return make_universe(g, {g.face(g.face_of(d)).id, g.face(g.face_of(g.twin(d))).id});
}

inline Universe curl_universe() { return universe_from_pd({{1, 2, 2, 1}}); }
inline Universe hopf_universe() { return universe_from_pd({{1, 2, 3, 4}, {4, 3, 2, 1}}); }
inline Universe trefoil_universe() { return universe_from_pd({{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}}); }
inline Universe figure_eight_universe() {
  return universe_from_pd({{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}});
}

inline std::vector<std::pair<std::string, Universe>> corpus_universes() {
  return {{"curl", curl_universe()},
          {"hopf", hopf_universe()},
          {"trefoil", trefoil_universe()},
          {"figure_eight", figure_eight_universe()}};
}

/// Named bipartite plane graphs with at most 12 edges.
inline std::vector<std::pair<std::string, RotationGraph>> corpus_graphs() {
  std::vector<std::pair<std::string, RotationGraph>> out{
      {"single_edge", single_edge_graph()},
      {"path_2", generate_corpus("path", 2)},
      {"path_3", generate_corpus("path", 3)},
      {"c4", c4_graph()},
      {"even_cycle_3", generate_corpus("even_cycle", 3)},
      {"even_cycle_4", generate_corpus("even_cycle", 4)},
      {"theta_2", generate_corpus("theta", 2)},
      {"theta_3", generate_corpus("theta", 3)},
      {"theta_4", generate_corpus("theta", 4)},
      {"grid_1", generate_corpus("grid", 1)},
      {"grid_2", generate_corpus("grid", 2)},
      {"ladder_2", generate_corpus("ladder", 2)},
      {"ladder_3", generate_corpus("ladder", 3)},
      {"running_example", running_example_graph()},
  };
  for (const auto& [name, u] : corpus_universes()) out.emplace_back(name + "_dual", universe_dual_graph(u));
  return out;
}

}  // namespace trinkit
