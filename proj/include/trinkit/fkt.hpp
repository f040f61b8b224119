#pragma once

// Universes (4-regular plane graphs with two adjacent starred faces), their
// states, trails and transpositions, and the link to tight configurations.
//
// Quadrant q at a vertex lies between rotation darts q and q+1, inside
// face_of(rot[q]). A marker in quadrant q splits the vertex so that quadrants
// q and q+2 merge: splitting 0 pairs rotation positions {0,3},{1,2} and
// splitting 1 pairs {0,1},{2,3}.

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "trinkit/graph_json.hpp"
#include "trinkit/magic.hpp"
#include "trinkit/transitions.hpp"

namespace trinkit {

struct Universe {
  RotationGraph g;
  std::array<int, 2> stars{};  // face indices

  bool starred(int face) const { return face == stars[0] || face == stars[1]; }
  int quadrant_face(int v, int q) const {
    const auto& rot = g.vertex(v).rotation;
    return g.face_of(rot[static_cast<std::size_t>(((q % 4) + 4) % 4)]);
  }
};

/// Throws NotFourRegular, StarsNotAdjacent or CountMismatch.
inline Universe make_universe(const RotationGraph& g, const std::array<std::string, 2>& stars) {
  for (const auto& v : g.vertices())
    if (v.rotation.size() != 4) throw NotFourRegular("vertex '" + v.id + "' has degree " + std::to_string(v.rotation.size()));
  Universe u{g, {}};
  for (std::size_t i = 0; i < 2; ++i) {
    auto f = g.find_face(stars[i]);
    if (!f) throw SchemaError("unknown starred face '" + stars[i] + "'");
    u.stars[i] = *f;
  }
  bool adjacent = false;
  for (std::size_t d = 0; d < g.num_darts(); ++d)
    if (g.face_of(static_cast<int>(d)) == u.stars[0] && g.face_of(g.twin(static_cast<int>(d))) == u.stars[1]) adjacent = true;
  if (u.stars[0] == u.stars[1] || !adjacent)
    throw StarsNotAdjacent("starred faces '" + stars[0] + "' and '" + stars[1] + "' do not share an edge");
  if (g.num_vertices() + 2 != g.num_faces())
    throw CountMismatch("vertex count does not match the unstarred face count");
  return u;
}

inline Universe parse_universe(const json& doc) {
  RotationGraph g = parse_graph(doc);
  if (!doc.contains("stars") || !doc.at("stars").is_array() || doc.at("stars").size() != 2 ||
      !doc.at("stars")[0].is_string() || !doc.at("stars")[1].is_string())
    throw SchemaError("universe: 'stars' must list two face ids");
  return make_universe(g, {doc.at("stars")[0].get<std::string>(), doc.at("stars")[1].get<std::string>()});
}

inline json universe_to_json(const Universe& u) {
  json doc = graph_to_json(u.g, true);
  doc["stars"] = {u.g.face(u.stars[0]).id, u.g.face(u.stars[1]).id};
  return doc;
}

struct UniverseState {
  std::vector<int> marker;  // quadrant per vertex index
  bool operator==(const UniverseState& o) const { return marker == o.marker; }
  bool operator<(const UniverseState& o) const { return marker < o.marker; }
};

inline bool is_state(const Universe& u, const UniverseState& s) {
  if (s.marker.size() != u.g.num_vertices()) return false;
  std::set<int> used;
  for (std::size_t v = 0; v < s.marker.size(); ++v) {
    if (s.marker[v] < 0 || s.marker[v] > 3) return false;
    const int f = u.quadrant_face(static_cast<int>(v), s.marker[v]);
    if (u.starred(f) || !used.insert(f).second) return false;
  }
  return true;
}

/// All states, ascending by marker vector.
inline std::vector<UniverseState> enumerate_states(const Universe& u, long long cap = kDefaultCap) {
  std::vector<UniverseState> out;
  UniverseState cur;
  cur.marker.assign(u.g.num_vertices(), -1);
  std::vector<char> used(u.g.num_faces(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == cur.marker.size()) {
      if (static_cast<long long>(out.size()) >= cap) throw CapExceeded("state count exceeds cap " + std::to_string(cap));
      out.push_back(cur);
      return;
    }
    for (int q = 0; q < 4; ++q) {
      const int f = u.quadrant_face(static_cast<int>(v), q);
      if (u.starred(f) || used[static_cast<std::size_t>(f)]) continue;
      used[static_cast<std::size_t>(f)] = 1;
      cur.marker[v] = q;
      rec(v + 1);
      used[static_cast<std::size_t>(f)] = 0;
    }
    cur.marker[v] = -1;
  };
  rec(0);
  return out;
}

struct Trail {
  std::vector<int> splitting;  // 0 or 1 per vertex index
  std::vector<int> loop;       // outgoing darts in traversal order
};

/// Rotation position paired with `pos` under splitting `s`.
inline int split_partner(int pos, int s) { return s == 0 ? 3 - pos : pos ^ 1; }

/// Number of closed curves produced by the splitting.
inline int splitting_loops(const Universe& u, const std::vector<int>& splitting) {
  const RotationGraph& g = u.g;
  std::vector<char> seen(g.num_darts(), 0);
  int loops = 0;
  for (std::size_t s = 0; s < g.num_darts(); ++s) {
    if (seen[s]) continue;
    ++loops;
    int d = static_cast<int>(s);
    while (!seen[static_cast<std::size_t>(d)]) {
      seen[static_cast<std::size_t>(d)] = 1;
      const int in = g.twin(d);
      seen[static_cast<std::size_t>(in)] = 1;
      const int v = g.tail(in);
      d = g.vertex(v).rotation[static_cast<std::size_t>(
          split_partner(g.dart(in).rot_pos, splitting[static_cast<std::size_t>(v)]))];
    }
  }
  return loops;
}

inline Trail splitting_to_trail(const Universe& u, const std::vector<int>& splitting) {
  if (splitting_loops(u, splitting) != 1) throw NotSingleLoop("splitting does not give a single loop");
  const RotationGraph& g = u.g;
  Trail t{splitting, {}};
  int d = 0;
  do {
    t.loop.push_back(d);
    const int in = g.twin(d);
    const int v = g.tail(in);
    d = g.vertex(v).rotation[static_cast<std::size_t>(
        split_partner(g.dart(in).rot_pos, splitting[static_cast<std::size_t>(v)]))];
  } while (d != 0);
  return t;
}

inline Trail state_to_trail(const Universe& u, const UniverseState& s) {
  std::vector<int> splitting;
  for (int q : s.marker) splitting.push_back(q % 2);
  return splitting_to_trail(u, splitting);
}

/// Inverse of state_to_trail: merged faces form two trees rooted at the
/// stars, and each vertex puts its marker on the side away from the root.
inline UniverseState trail_to_state(const Universe& u, const Trail& t) {
  const std::size_t nf = u.g.num_faces();
  std::vector<std::vector<std::pair<int, int>>> adj(nf);  // (face, vertex)
  for (std::size_t v = 0; v < u.g.num_vertices(); ++v) {
    const int s = t.splitting[v];
    const int a = u.quadrant_face(static_cast<int>(v), s);
    const int b = u.quadrant_face(static_cast<int>(v), s + 2);
    if (a == b) throw MappingFailure("splitting merges a face with itself");
    adj[static_cast<std::size_t>(a)].push_back({b, static_cast<int>(v)});
    adj[static_cast<std::size_t>(b)].push_back({a, static_cast<int>(v)});
  }
  UniverseState out;
  out.marker.assign(u.g.num_vertices(), -1);
  std::vector<char> seen(nf, 0);
  std::size_t reached = 0;
  for (int root : u.stars) {
    if (seen[static_cast<std::size_t>(root)]) throw MappingFailure("both stars lie in one merged region");
    std::deque<int> queue{root};
    seen[static_cast<std::size_t>(root)] = 1;
    while (!queue.empty()) {
      const int f = queue.front();
      queue.pop_front();
      ++reached;
      for (auto [g2, v] : adj[static_cast<std::size_t>(f)]) {
        if (out.marker[static_cast<std::size_t>(v)] != -1) continue;
        if (seen[static_cast<std::size_t>(g2)]) throw MappingFailure("merged regions contain a cycle");
        seen[static_cast<std::size_t>(g2)] = 1;
        const int s = t.splitting[static_cast<std::size_t>(v)];
        out.marker[static_cast<std::size_t>(v)] = u.quadrant_face(v, s) == g2 ? s : s + 2;
        queue.push_back(g2);
      }
    }
  }
  if (reached != nf) throw MappingFailure("merged regions do not cover every face");
  return out;
}

enum class Direction { clockwise, counterclockwise };

inline const char* direction_name(Direction d) {
  return d == Direction::clockwise ? "clockwise" : "counterclockwise";
}

/// States one transposition away. Vertex v with its marker in R1 and w with
/// its marker in R2 swap faces by turning both markers a quarter turn the
/// same way; clockwise lowers the quadrant index.
inline std::vector<std::pair<UniverseState, Direction>> transpositions(const Universe& u, const UniverseState& s) {
  std::vector<std::pair<UniverseState, Direction>> out;
  const int n = static_cast<int>(u.g.num_vertices());
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) {
      const int q = s.marker[static_cast<std::size_t>(v)];
      const int p = s.marker[static_cast<std::size_t>(w)];
      const int r1 = u.quadrant_face(v, q);
      const int r2 = u.quadrant_face(w, p);
      for (auto [step, dir] : {std::pair{-1, Direction::clockwise}, std::pair{1, Direction::counterclockwise}}) {
        if (u.quadrant_face(v, q + step) != r2 || u.quadrant_face(w, p + step) != r1) continue;
        UniverseState next = s;
        next.marker[static_cast<std::size_t>(v)] = (q + step + 4) % 4;
        next.marker[static_cast<std::size_t>(w)] = (p + step + 4) % 4;
        out.emplace_back(std::move(next), dir);
      }
    }
  return out;
}

struct ClockReport {
  bool acyclic = false;
  bool weakly_connected = false;
  bool unique_source = false;
  bool unique_sink = false;
  std::optional<bool> lattice;  // only computed on request
  bool ok() const { return acyclic && weakly_connected && unique_source && unique_sink && lattice.value_or(true); }
};

struct ClockGraph {
  std::vector<UniverseState> states;
  std::vector<std::pair<int, int>> arcs;  // clockwise transpositions
  ClockReport report;
};

namespace detail {

inline std::optional<bool> check_lattice(std::size_t n, const std::vector<std::pair<int, int>>& arcs,
                                         const std::vector<int>& topo) {
  // le[x][y]: y reachable from x.
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  std::vector<std::vector<int>> out(n);
  for (auto [a, b] : arcs) out[static_cast<std::size_t>(a)].push_back(b);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const auto x = static_cast<std::size_t>(*it);
    le[x][x] = 1;
    for (int y : out[x])
      for (std::size_t z = 0; z < n; ++z)
        if (le[static_cast<std::size_t>(y)][z]) le[x][z] = 1;
  }
  auto unique_extreme = [&](std::size_t a, std::size_t b, bool upper) {
    std::vector<std::size_t> common;
    for (std::size_t z = 0; z < n; ++z)
      if (upper ? (le[a][z] && le[b][z]) : (le[z][a] && le[z][b])) common.push_back(z);
    for (std::size_t z : common) {
      bool best = true;
      for (std::size_t w : common)
        if (!(upper ? le[z][w] : le[w][z])) best = false;
      if (best) return true;
    }
    return false;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!unique_extreme(a, b, true) || !unique_extreme(a, b, false)) return false;
  return true;
}

}  // namespace detail

/// States joined by clockwise transpositions, with the structural checks.
/// `check_lattice` also verifies meets and joins (cubic; small inputs only).
inline ClockGraph clock_graph(const Universe& u, long long cap = kDefaultCap, bool check_lattice = false) {
  ClockGraph cg;
  cg.states = enumerate_states(u, cap);
  const std::size_t n = cg.states.size();
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [next, dir] : transpositions(u, cg.states[i])) {
      if (dir != Direction::clockwise) continue;
      auto it = std::lower_bound(cg.states.begin(), cg.states.end(), next);
      cg.arcs.emplace_back(static_cast<int>(i), static_cast<int>(it - cg.states.begin()));
    }
  std::sort(cg.arcs.begin(), cg.arcs.end());
  std::vector<int> indeg(n, 0), outdeg(n, 0);
  std::vector<std::vector<int>> out(n), und(n);
  for (auto [a, b] : cg.arcs) {
    ++outdeg[static_cast<std::size_t>(a)];
    ++indeg[static_cast<std::size_t>(b)];
    out[static_cast<std::size_t>(a)].push_back(b);
    und[static_cast<std::size_t>(a)].push_back(b);
    und[static_cast<std::size_t>(b)].push_back(a);
  }
  // Kahn's algorithm for acyclicity.
  std::vector<int> topo, deg = indeg;
  std::deque<int> queue;
  for (std::size_t i = 0; i < n; ++i)
    if (deg[i] == 0) queue.push_back(static_cast<int>(i));
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    topo.push_back(x);
    for (int y : out[static_cast<std::size_t>(x)])
      if (--deg[static_cast<std::size_t>(y)] == 0) queue.push_back(y);
  }
  cg.report.acyclic = topo.size() == n;
  std::vector<char> seen(n, 0);
  std::size_t reached = 0;
  if (n > 0) {
    std::deque<int> bfs{0};
    seen[0] = 1;
    while (!bfs.empty()) {
      const int x = bfs.front();
      bfs.pop_front();
      ++reached;
      for (int y : und[static_cast<std::size_t>(x)])
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          bfs.push_back(y);
        }
    }
  }
  cg.report.weakly_connected = n > 0 && reached == n;
  cg.report.unique_source = std::count(indeg.begin(), indeg.end(), 0) == 1;
  cg.report.unique_sink = std::count(outdeg.begin(), outdeg.end(), 0) == 1;
  if (check_lattice && cg.report.acyclic) cg.report.lattice = detail::check_lattice(n, cg.arcs, topo);
  return cg;
}

/// Planar dual of the universe with a checkerboard colouring; its vertices
/// are the faces of the universe and its faces are named after the universe
/// vertices. Every face has four sides.
inline RotationGraph universe_dual_graph(const Universe& u) {
  return with_bipartite_colours(planar_dual(u.g));
}

struct Correspondence {
  std::size_t states = 0;
  std::size_t tight_configurations = 0;
  BigInt magic;
  std::vector<std::pair<UniverseState, std::size_t>> pairs;  // state -> graph vertex
  bool bijective = false;
  bool counts_agree = false;
  bool ok() const { return bijective && counts_agree; }
};

/// Chord diagrams on the faces of the dual graph given by a splitting.
inline Configuration splitting_configuration(const Universe& u, const Trinity& t, const std::vector<int>& splitting) {
  const RotationGraph& gu = t.g;
  Configuration c;
  for (std::size_t f = 0; f < gu.num_faces(); ++f) {
    const auto w = u.g.find_vertex(gu.face(static_cast<int>(f)).id);
    if (!w) throw MappingFailure("dual face '" + gu.face(static_cast<int>(f)).id + "' names no universe vertex");
    const auto& rot = u.g.vertex(*w).rotation;
    ChordDiagram d;
    d.partner.assign(4, -1);
    auto point = [&](int pos) {
      const auto x = gu.find_dart(u.g.dart(u.g.twin(rot[static_cast<std::size_t>(pos)])).id + "*");
      if (!x || gu.face_of(*x) != static_cast<int>(f)) throw MappingFailure("dual dart lookup failed");
      return gu.pos_in_face(*x);
    };
    for (int pos = 0; pos < 4; ++pos)
      d.partner[static_cast<std::size_t>(point(pos))] = point(split_partner(pos, splitting[static_cast<std::size_t>(*w)]));
    if (!is_non_crossing(d)) throw MappingFailure("splitting gives a crossing diagram");
    c.discs.push_back(std::move(d));
  }
  return c;
}

/// Maps every state, through its splitting, to a configuration on the dual
/// graph and checks that this is a bijection onto the tight configurations
/// whose number is the magic number.
inline Correspondence states_vs_configurations(const Universe& u, long long cap = kDefaultCap) {
  Correspondence out;
  const Trinity t = build_trinity(universe_dual_graph(u));
  const ConfigurationGraph cg = build_configuration_graph(t, cap);
  const auto states = enumerate_states(u, cap);
  out.states = states.size();
  out.tight_configurations = cg.vertices.size();
  out.magic = count_arborescences(t.dual_v, t.dual_v.min_vertex());
  std::set<std::size_t> hit;
  bool all_found = true;
  for (const auto& s : states) {
    const Trail trail = state_to_trail(u, s);
    const auto v = cg.find(splitting_configuration(u, t, trail.splitting));
    if (!v) {
      all_found = false;
      continue;
    }
    hit.insert(*v);
    out.pairs.emplace_back(s, *v);
  }
  out.bijective = all_found && hit.size() == states.size() && hit.size() == cg.vertices.size();
  out.counts_agree = out.magic == BigInt(out.states) && out.states == out.tight_configurations;
  return out;
}

}  // namespace trinkit
