#pragma once

// Spanning trees of undirected colour graphs and spanning arborescences of
// directed duals: exact counts by the matrix-tree theorem, complete
// enumeration, and fixed-degree exchange paths.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "trinkit/exact.hpp"
#include "trinkit/plane_graph.hpp"
#include "trinkit/trinity.hpp"

namespace trinkit {

/// Edge indices of the host graph, ascending by index.
struct SpanningTree {
  std::vector<int> edges;
  bool operator==(const SpanningTree& o) const { return edges == o.edges; }
  bool operator<(const SpanningTree& o) const { return edges < o.edges; }
};

/// Arc indices of the host dual, ascending by index.
struct Arborescence {
  int root = -1;
  std::vector<int> arcs;
};

namespace detail {

// Union-find with undo, for backtracking.
class RollbackDsu {
 public:
  explicit RollbackDsu(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    history_.push_back(b);
    return true;
  }
  void undo() {
    const int b = history_.back();
    history_.pop_back();
    const int a = parent_[static_cast<std::size_t>(b)];
    size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
    parent_[static_cast<std::size_t>(b)] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

inline std::vector<int> edges_by_id(const RotationGraph& g) {
  std::vector<int> order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.edge(a).id < g.edge(b).id; });
  return order;
}

inline std::pair<int, int> ends(const RotationGraph& g, int e) {
  return {g.tail(g.edge(e).darts[0]), g.tail(g.edge(e).darts[1])};
}

}  // namespace detail

/// Number of spanning trees (Kirchhoff). Loops are ignored.
inline BigInt count_spanning_trees(const RotationGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n <= 1) return BigInt(1);
  BigMatrix lap(n - 1, std::vector<BigInt>(n - 1, BigInt(0)));
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = detail::ends(g, static_cast<int>(e));
    if (a == b) continue;
    if (a > 0) lap[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(a - 1)] += 1;
    if (b > 0) lap[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(b - 1)] += 1;
    if (a > 0 && b > 0) {
      lap[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] -= 1;
      lap[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] -= 1;
    }
  }
  return bareiss_determinant(std::move(lap));
}

/// Calls `visit` with every spanning tree exactly once. Trees are produced by
/// include/exclude branching over edges in edge-id order, includes first.
/// Throws CapExceeded when the tree count exceeds `cap`.
inline void for_each_spanning_tree(const RotationGraph& g,
                                   const std::function<void(const SpanningTree&)>& visit,
                                   long long cap = kDefaultCap) {
  const BigInt total = count_spanning_trees(g);
  if (total > cap)
    throw CapExceeded("spanning tree count " + to_decimal(total) + " exceeds cap " + std::to_string(cap));
  std::vector<int> order;
  for (int e : detail::edges_by_id(g))
    if (!g.is_loop(e)) order.push_back(e);
  const std::size_t need = g.num_vertices() - 1;
  detail::RollbackDsu dsu(g.num_vertices());
  std::vector<int> chosen;

  // Whether chosen edges plus order[from..] still connect the graph.
  auto can_span = [&](std::size_t from) {
    detail::RollbackDsu probe(g.num_vertices());
    std::size_t comps = g.num_vertices();
    for (int e : chosen) {
      auto [a, b] = detail::ends(g, e);
      if (probe.unite(a, b)) --comps;
    }
    for (std::size_t i = from; i < order.size() && comps > 1; ++i) {
      auto [a, b] = detail::ends(g, order[i]);
      if (probe.unite(a, b)) --comps;
    }
    return comps == 1;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (chosen.size() == need) {
      SpanningTree t{chosen};
      std::sort(t.edges.begin(), t.edges.end());
      visit(t);
      return;
    }
    if (i == order.size() || order.size() - i < need - chosen.size()) return;
    auto [a, b] = detail::ends(g, order[i]);
    if (dsu.unite(a, b)) {
      chosen.push_back(order[i]);
      rec(i + 1);
      chosen.pop_back();
      dsu.undo();
    }
    if (can_span(i + 1)) rec(i + 1);
  };
  rec(0);
}

inline std::vector<SpanningTree> enumerate_spanning_trees(const RotationGraph& g,
                                                          long long cap = kDefaultCap) {
  std::vector<SpanningTree> out;
  for_each_spanning_tree(g, [&](const SpanningTree& t) { out.push_back(t); }, cap);
  return out;
}

inline bool is_spanning_tree(const RotationGraph& g, const SpanningTree& t) {
  if (t.edges.size() + 1 != g.num_vertices()) return false;
  detail::RollbackDsu dsu(g.num_vertices());
  for (int e : t.edges) {
    if (e < 0 || static_cast<std::size_t>(e) >= g.num_edges()) return false;
    auto [a, b] = detail::ends(g, e);
    if (!dsu.unite(a, b)) return false;
  }
  return true;
}

/// Tree degree at every vertex of colour `c` (vertex index -> degree).
inline std::map<int, int> degree_record(const RotationGraph& g, const SpanningTree& t, Colour c) {
  std::map<int, int> rec;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (g.vertex(static_cast<int>(v)).colour == c) rec[static_cast<int>(v)] = 0;
  for (int e : t.edges) {
    auto [a, b] = detail::ends(g, e);
    if (rec.count(a)) ++rec[a];
    if (rec.count(b)) ++rec[b];
  }
  return rec;
}

inline int root_index(const DirectedDual& d, const std::string& root) {
  const int r = d.index_of(root);
  if (r < 0) throw UnknownRoot("no vertex '" + root + "' in the dual");
  return r;
}

/// Number of spanning arborescences directed away from `root`, by the
/// directed matrix-tree theorem on the in-degree Laplacian.
inline BigInt count_arborescences(const DirectedDual& d, const std::string& root) {
  const int r = root_index(d, root);
  const std::size_t n = d.vertices.size();
  std::vector<int> idx(n, -1);
  int k = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (static_cast<int>(v) != r) idx[v] = k++;
  BigMatrix lap(static_cast<std::size_t>(k), std::vector<BigInt>(static_cast<std::size_t>(k), BigInt(0)));
  for (const auto& a : d.arcs) {
    if (a.tail == a.head) continue;
    const int h = idx[static_cast<std::size_t>(a.head)];
    const int t = idx[static_cast<std::size_t>(a.tail)];
    if (h < 0) continue;
    lap[static_cast<std::size_t>(h)][static_cast<std::size_t>(h)] += 1;
    if (t >= 0) lap[static_cast<std::size_t>(t)][static_cast<std::size_t>(h)] -= 1;
  }
  return bareiss_determinant(std::move(lap));
}

/// Every arborescence rooted at `root`: each other vertex picks one in-arc
/// (candidates in arc-id order), rejecting choices that close a cycle.
inline void for_each_arborescence(const DirectedDual& d, const std::string& root,
                                  const std::function<void(const Arborescence&)>& visit,
                                  long long cap = kDefaultCap) {
  const int r = root_index(d, root);
  const BigInt total = count_arborescences(d, root);
  if (total > cap)
    throw CapExceeded("arborescence count " + to_decimal(total) + " exceeds cap " + std::to_string(cap));
  const std::size_t n = d.vertices.size();
  std::vector<std::vector<int>> in_arcs(n);
  for (std::size_t a = 0; a < d.arcs.size(); ++a)
    if (d.arcs[a].tail != d.arcs[a].head)
      in_arcs[static_cast<std::size_t>(d.arcs[a].head)].push_back(static_cast<int>(a));
  for (auto& list : in_arcs)
    std::sort(list.begin(), list.end(), [&](int x, int y) {
      return d.arcs[static_cast<std::size_t>(x)].id < d.arcs[static_cast<std::size_t>(y)].id;
    });
  std::vector<int> targets;
  for (std::size_t v = 0; v < n; ++v)
    if (static_cast<int>(v) != r) targets.push_back(static_cast<int>(v));
  std::vector<int> parent(n, -1);
  std::vector<int> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == targets.size()) {
      Arborescence out{r, chosen};
      std::sort(out.arcs.begin(), out.arcs.end());
      visit(out);
      return;
    }
    const int v = targets[i];
    for (int a : in_arcs[static_cast<std::size_t>(v)]) {
      const int t = d.arcs[static_cast<std::size_t>(a)].tail;
      int w = t;
      while (w != -1 && w != v && w != r) w = parent[static_cast<std::size_t>(w)];
      if (w == v) continue;
      parent[static_cast<std::size_t>(v)] = t;
      chosen.push_back(a);
      rec(i + 1);
      chosen.pop_back();
      parent[static_cast<std::size_t>(v)] = -1;
    }
  };
  rec(0);
}

inline std::vector<Arborescence> enumerate_arborescences(const DirectedDual& d, const std::string& root,
                                                         long long cap = kDefaultCap) {
  std::vector<Arborescence> out;
  for_each_arborescence(d, root, [&](const Arborescence& a) { out.push_back(a); }, cap);
  return out;
}

/// Exchange path between two spanning trees with the same degree record at
/// the vertices of colour `c`. Returns T_1..T_k with T_k = T'; consecutive
/// trees differ by one removed and one added edge and keep the record.
/// Found by breadth-first search, so no minimality beyond BFS order is implied.
inline std::vector<SpanningTree> tree_exchange_path(const RotationGraph& g, const SpanningTree& from,
                                                    const SpanningTree& to, Colour c,
                                                    long long cap = kDefaultCap) {
  if (!is_spanning_tree(g, from) || !is_spanning_tree(g, to))
    throw NotSpanning("exchange path endpoints must be spanning trees");
  if (degree_record(g, from, c) != degree_record(g, to, c))
    throw SameHypertreeRequired("trees have different degree records");
  if (from == to) return {};

  auto class_end = [&](int e) {
    auto [a, b] = detail::ends(g, e);
    return g.vertex(a).colour == c ? a : b;
  };
  std::map<std::vector<int>, std::vector<int>> prev;  // tree -> predecessor
  std::deque<std::vector<int>> queue{from.edges};
  prev[from.edges] = {};
  while (!queue.empty()) {
    std::vector<int> cur = queue.front();
    queue.pop_front();
    if (cur == to.edges) break;
    std::vector<char> in_tree(g.num_edges(), 0);
    for (int e : cur) in_tree[static_cast<std::size_t>(e)] = 1;
    for (int out : cur) {
      detail::RollbackDsu dsu(g.num_vertices());
      for (int e : cur)
        if (e != out) {
          auto [a, b] = detail::ends(g, e);
          dsu.unite(a, b);
        }
      for (std::size_t in = 0; in < g.num_edges(); ++in) {
        const int e = static_cast<int>(in);
        if (in_tree[in] || g.is_loop(e) || class_end(e) != class_end(out)) continue;
        auto [a, b] = detail::ends(g, e);
        if (dsu.find(a) == dsu.find(b)) continue;
        std::vector<int> next = cur;
        *std::find(next.begin(), next.end(), out) = e;
        std::sort(next.begin(), next.end());
        if (prev.count(next)) continue;
        if (static_cast<long long>(prev.size()) >= cap)
          throw CapExceeded("exchange search exceeded cap " + std::to_string(cap));
        prev[next] = cur;
        queue.push_back(std::move(next));
      }
    }
  }
  if (!prev.count(to.edges)) throw NoPath("no fixed-degree exchange path between the trees");
  std::vector<SpanningTree> path;
  for (std::vector<int> cur = to.edges; cur != from.edges; cur = prev[cur]) path.push_back({cur});
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace trinkit
