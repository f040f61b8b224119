#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the graph accessors.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "trinkit/dividing.hpp"
#include "trinkit/fkt.hpp"
#include "trinkit/trinity.hpp"

namespace oracle {

using namespace trinkit;

struct Uf {
  std::vector<int> p;
  explicit Uf(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int f(int x) { return p[static_cast<std::size_t>(x)] == x ? x : p[static_cast<std::size_t>(x)] = f(p[static_cast<std::size_t>(x)]); }
  bool u(int a, int b) {
    a = f(a);
    b = f(b);
    if (a == b) return false;
    p[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

/// Every (V-1)-subset of edges that is acyclic, by bitmask.
inline std::set<std::vector<int>> spanning_trees(const RotationGraph& g) {
  std::set<std::vector<int>> out;
  const std::size_t m = g.num_edges();
  const std::size_t need = g.num_vertices() - 1;
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountl(mask)) != need) continue;
    Uf uf(g.num_vertices());
    std::vector<int> edges;
    bool ok = true;
    for (std::size_t e = 0; e < m && ok; ++e) {
      if (!((mask >> e) & 1)) continue;
      const auto& ed = g.edge(static_cast<int>(e));
      ok = uf.u(g.tail(ed.darts[0]), g.tail(ed.darts[1]));
      edges.push_back(static_cast<int>(e));
    }
    if (ok) out.insert(edges);
  }
  return out;
}

/// Every arc subset where each non-root vertex has in-degree one and
/// everything is reachable from the root.
inline std::size_t arborescences(const DirectedDual& d, int root) {
  const std::size_t n = d.vertices.size();
  const std::size_t m = d.arcs.size();
  std::size_t count = 0;
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountl(mask)) + 1 != n) continue;
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> out(n);
    for (std::size_t a = 0; a < m; ++a)
      if ((mask >> a) & 1) {
        ++indeg[static_cast<std::size_t>(d.arcs[a].head)];
        out[static_cast<std::size_t>(d.arcs[a].tail)].push_back(d.arcs[a].head);
      }
    if (indeg[static_cast<std::size_t>(root)] != 0) continue;
    bool ok = true;
    for (std::size_t v = 0; v < n; ++v)
      if (static_cast<int>(v) != root && indeg[v] != 1) ok = false;
    if (!ok) continue;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{root};
    seen[static_cast<std::size_t>(root)] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      ++reached;
      for (int y : out[static_cast<std::size_t>(x)])
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
    }
    count += reached == n;
  }
  return count;
}

/// All perfect matchings of 2n points, filtered by the pairwise crossing test.
inline std::set<std::vector<int>> non_crossing_matchings(std::size_t n) {
  std::set<std::vector<int>> out;
  std::vector<int> p(2 * n, -1);
  std::function<void()> rec = [&]() {
    auto it = std::find(p.begin(), p.end(), -1);
    if (it == p.end()) {
      for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t c = 0; c < p.size(); ++c) {
          const int b = p[a], d = p[c];
          if (static_cast<int>(a) < static_cast<int>(c) && static_cast<int>(c) < b && b < d) return;
        }
      out.insert(p);
      return;
    }
    const std::size_t i = static_cast<std::size_t>(it - p.begin());
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[j] != -1) continue;
      p[i] = static_cast<int>(j);
      p[j] = static_cast<int>(i);
      rec();
      p[i] = p[j] = -1;
    }
  };
  rec();
  return out;
}

/// Closed curves after gluing: union-find over (face, position) points.
inline int glued_curves(const Trinity& t, const Configuration& c) {
  const RotationGraph& g = t.g;
  std::vector<std::size_t> offset(g.num_faces() + 1, 0);
  for (std::size_t f = 0; f < g.num_faces(); ++f) offset[f + 1] = offset[f] + g.face(static_cast<int>(f)).boundary.size();
  Uf uf(offset.back());
  int comps = static_cast<int>(offset.back());
  for (std::size_t f = 0; f < g.num_faces(); ++f)
    for (std::size_t i = 0; i < c.discs[f].partner.size(); ++i)
      comps -= uf.u(static_cast<int>(offset[f] + i), static_cast<int>(offset[f] + static_cast<std::size_t>(c.discs[f].partner[i])));
  // Each edge joins its two darts' points.
  for (const auto& e : g.edges()) {
    auto point = [&](int d) {
      for (std::size_t f = 0; f < g.num_faces(); ++f) {
        const auto& b = g.face(static_cast<int>(f)).boundary;
        for (std::size_t i = 0; i < b.size(); ++i)
          if (b[i] == d) return static_cast<int>(offset[f] + i);
      }
      return -1;
    };
    comps -= uf.u(point(e.darts[0]), point(e.darts[1]));
  }
  return comps;
}

/// Marker vectors over 4^V with a bijective region map.
inline std::set<std::vector<int>> states(const Universe& u) {
  std::set<std::vector<int>> out;
  const std::size_t n = u.g.num_vertices();
  std::vector<int> m(n, 0);
  for (unsigned long code = 0; code < (1UL << (2 * n)); ++code) {
    std::set<int> faces;
    bool ok = true;
    for (std::size_t v = 0; v < n; ++v) {
      m[v] = static_cast<int>((code >> (2 * v)) & 3);
      const int f = u.g.face_of(u.g.vertex(static_cast<int>(v)).rotation[static_cast<std::size_t>(m[v])]);
      if (f == u.stars[0] || f == u.stars[1] || !faces.insert(f).second) ok = false;
    }
    if (ok) out.insert(m);
  }
  return out;
}

/// Splittings (one bit per vertex) that give a single curve, counted with a
/// union-find over darts.
inline std::set<std::vector<int>> single_loop_splittings(const Universe& u) {
  std::set<std::vector<int>> out;
  const std::size_t n = u.g.num_vertices();
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    Uf uf(u.g.num_darts());
    int comps = static_cast<int>(u.g.num_darts());
    for (const auto& e : u.g.edges()) comps -= uf.u(e.darts[0], e.darts[1]);
    std::vector<int> sp(n);
    for (std::size_t v = 0; v < n; ++v) {
      sp[v] = static_cast<int>((mask >> v) & 1);
      const auto& r = u.g.vertex(static_cast<int>(v)).rotation;
      // Splitting 0 joins the strands {0,3},{1,2}; splitting 1 joins {0,1},{2,3}.
      if (sp[v] == 0) {
        comps -= uf.u(r[0], r[3]);
        comps -= uf.u(r[1], r[2]);
      } else {
        comps -= uf.u(r[0], r[1]);
        comps -= uf.u(r[2], r[3]);
      }
    }
    if (comps == 1) out.insert(sp);
  }
  return out;
}

}  // namespace oracle
