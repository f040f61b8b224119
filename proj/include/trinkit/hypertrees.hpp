#pragma once

// The six hypergraphs of a trinity and their hypertree sets.
//
// Key "XY" names the hypergraph with vertex set X and hyperedge set Y, both
// drawn from V (violet), E (emerald), R (red). Its bipartite graph is the
// colour graph spanned by X and Y. A hypertree is f(y) = deg_T(y) - 1 over a
// spanning tree T, indexed by hyperedge ids in sorted order.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trinkit/trees.hpp"
#include "trinkit/trinity.hpp"

namespace trinkit {

inline const std::array<std::string, 6>& hypergraph_keys() {
  static const std::array<std::string, 6> keys{"VE", "EV", "ER", "RE", "VR", "RV"};
  return keys;
}

inline Colour class_colour(char c) {
  switch (c) {
    case 'V': return Colour::violet;
    case 'E': return Colour::emerald;
    case 'R': return Colour::red;
    default: break;
  }
  throw SchemaError(std::string("unknown vertex class '") + c + "'");
}

struct Hypergraph {
  std::string key;
  Colour vertex_class = Colour::none;
  Colour hyperedge_class = Colour::none;
  RotationGraph bip;
  std::vector<int> hyperedges;  // bip vertex indices, sorted by id
  std::vector<std::string> hyperedge_ids;

  std::size_t num_vertices() const { return bip.num_vertices() - hyperedges.size(); }
};

namespace detail {

inline std::vector<int> class_members(const RotationGraph& g, Colour c) {
  std::vector<int> out;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (g.vertex(static_cast<int>(v)).colour == c) out.push_back(static_cast<int>(v));
  std::sort(out.begin(), out.end(), [&](int a, int b) { return g.vertex(a).id < g.vertex(b).id; });
  return out;
}

}  // namespace detail

/// Hypergraph `key` of the trinity, e.g. "ER".
inline Hypergraph make_hypergraph(const Trinity& t, const std::string& key) {
  if (key.size() != 2 || key[0] == key[1]) throw SchemaError("bad hypergraph key '" + key + "'");
  Hypergraph h;
  h.key = key;
  h.vertex_class = class_colour(key[0]);
  h.hyperedge_class = class_colour(key[1]);
  const Colour missing = static_cast<Colour>(6 - static_cast<int>(h.vertex_class) - static_cast<int>(h.hyperedge_class));
  h.bip = colour_graph(t, missing);
  h.hyperedges = detail::class_members(h.bip, h.hyperedge_class);
  for (int v : h.hyperedges) h.hyperedge_ids.push_back(h.bip.vertex(v).id);
  return h;
}

/// f(y) = deg_T(y) - 1 for the vertices of colour `hyperedge_class`, sorted by
/// id. Throws WrongClass when that colour is not one side of the graph.
inline std::vector<int> hypertree_of(const RotationGraph& g, const SpanningTree& t, Colour hyperedge_class) {
  const auto members = detail::class_members(g, hyperedge_class);
  if (members.empty()) throw WrongClass(std::string("graph has no ") + colour_name(hyperedge_class) + " vertices");
  for (const auto& e : g.edges()) {
    const bool a = g.vertex(g.tail(e.darts[0])).colour == hyperedge_class;
    const bool b = g.vertex(g.tail(e.darts[1])).colour == hyperedge_class;
    if (a == b) throw WrongClass("edge '" + e.id + "' does not cross the hyperedge class");
  }
  const auto rec = degree_record(g, t, hyperedge_class);
  std::vector<int> f;
  for (int v : members) f.push_back(rec.at(v) - 1);
  return f;
}

struct HypertreeSet {
  std::string key;
  std::vector<std::string> hyperedge_ids;
  std::map<std::vector<int>, SpanningTree> vectors;  // vector -> first witness

  std::size_t count() const { return vectors.size(); }
  bool contains(const std::vector<int>& f) const { return vectors.count(f) != 0; }
};

/// All hypertrees, from every spanning tree of the bipartite graph.
inline HypertreeSet enumerate_hypertrees(const Hypergraph& h, long long cap = kDefaultCap) {
  HypertreeSet out{h.key, h.hyperedge_ids, {}};
  for_each_spanning_tree(
      h.bip, [&](const SpanningTree& t) { out.vectors.emplace(hypertree_of(h.bip, t, h.hyperedge_class), t); },
      cap);
  return out;
}

/// The six hypertree sets, sharing one spanning-tree pass per colour graph.
inline std::map<std::string, HypertreeSet> enumerate_all_hypertrees(const Trinity& t, long long cap = kDefaultCap) {
  std::map<std::string, HypertreeSet> out;
  for (const auto& pair : std::array<std::array<std::string, 2>, 3>{{{"VE", "EV"}, {"ER", "RE"}, {"VR", "RV"}}}) {
    Hypergraph a = make_hypergraph(t, pair[0]);
    Hypergraph b = make_hypergraph(t, pair[1]);
    HypertreeSet sa{a.key, a.hyperedge_ids, {}};
    HypertreeSet sb{b.key, b.hyperedge_ids, {}};
    for_each_spanning_tree(
        a.bip,
        [&](const SpanningTree& tree) {
          sa.vectors.emplace(hypertree_of(a.bip, tree, a.hyperedge_class), tree);
          sb.vectors.emplace(hypertree_of(b.bip, tree, b.hyperedge_class), tree);
        },
        cap);
    out.emplace(a.key, std::move(sa));
    out.emplace(b.key, std::move(sb));
  }
  return out;
}

/// Searches for a spanning tree with degree f(y) + 1 at every hyperedge node,
/// independently of enumeration.
inline std::optional<SpanningTree> realize_hypertree(const Hypergraph& h, const std::vector<int>& f) {
  if (f.size() != h.hyperedges.size()) throw SizeMismatch("hypertree vector has the wrong length");
  const RotationGraph& g = h.bip;
  std::vector<int> target(g.num_vertices(), -1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0) return std::nullopt;
    target[static_cast<std::size_t>(h.hyperedges[i])] = f[i] + 1;
  }
  std::vector<int> order = detail::edges_by_id(g);
  std::vector<int> deg(g.num_vertices(), 0);
  std::vector<int> left(g.num_vertices(), 0);  // unprocessed incident edges
  for (int e : order) {
    auto [a, b] = detail::ends(g, e);
    ++left[static_cast<std::size_t>(a)];
    ++left[static_cast<std::size_t>(b)];
  }
  detail::RollbackDsu dsu(g.num_vertices());
  std::vector<int> chosen;
  const std::size_t need = g.num_vertices() - 1;
  std::optional<SpanningTree> found;
  auto feasible = [&](int v) {
    const int t = target[static_cast<std::size_t>(v)];
    return t < 0 || (deg[static_cast<std::size_t>(v)] <= t &&
                     deg[static_cast<std::size_t>(v)] + left[static_cast<std::size_t>(v)] >= t);
  };
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (found) return;
    if (chosen.size() == need) {
      for (int v : h.hyperedges)
        if (deg[static_cast<std::size_t>(v)] != target[static_cast<std::size_t>(v)]) return;
      found = SpanningTree{chosen};
      std::sort(found->edges.begin(), found->edges.end());
      return;
    }
    if (i == order.size()) return;
    const int e = order[i];
    auto [a, b] = detail::ends(g, e);
    --left[static_cast<std::size_t>(a)];
    --left[static_cast<std::size_t>(b)];
    if (dsu.unite(a, b)) {
      ++deg[static_cast<std::size_t>(a)];
      ++deg[static_cast<std::size_t>(b)];
      chosen.push_back(e);
      if (feasible(a) && feasible(b)) rec(i + 1);
      chosen.pop_back();
      --deg[static_cast<std::size_t>(a)];
      --deg[static_cast<std::size_t>(b)];
      dsu.undo();
    }
    if (feasible(a) && feasible(b)) rec(i + 1);
    ++left[static_cast<std::size_t>(a)];
    ++left[static_cast<std::size_t>(b)];
  };
  rec(0);
  return found;
}

/// The constant c with B1 = c - B2, if any. Throws IndexMismatch when the
/// sets are indexed by different hyperedges.
inline std::optional<std::vector<int>> translate_offset(const HypertreeSet& b1, const HypertreeSet& b2) {
  if (b1.hyperedge_ids != b2.hyperedge_ids)
    throw IndexMismatch("hypertree sets " + b1.key + " and " + b2.key + " use different hyperedges");
  if (b1.count() != b2.count() || b1.count() == 0) return std::nullopt;
  const std::vector<int>& hi = b1.vectors.rbegin()->first;
  const std::vector<int>& lo = b2.vectors.begin()->first;
  std::vector<int> c(hi.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = hi[i] + lo[i];
  for (const auto& [v, _] : b2.vectors) {
    std::vector<int> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = c[i] - v[i];
    if (!b1.contains(w)) return std::nullopt;
  }
  return c;
}

/// Planar-dual hypergraph pairs; each pair shares its hyperedge set.
inline const std::array<std::array<std::string, 2>, 3>& dual_hypergraph_pairs() {
  static const std::array<std::array<std::string, 2>, 3> pairs{{{"VE", "RE"}, {"ER", "VR"}, {"RV", "EV"}}};
  return pairs;
}

}  // namespace trinkit
