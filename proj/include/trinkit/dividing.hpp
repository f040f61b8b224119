#pragma once

// Chord diagrams on the face discs of a trinity.
//
// Face r of G with boundary darts d_0 .. d_{2m-1} (trace order, m = n_r) gives
// a disc with 2m boundary points; point i sits on the edge of d_i. Arc i runs
// from point i to point i+1 past the vertex head(d_i), and is positive when
// that vertex is violet, negative when emerald.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "trinkit/trees.hpp"
#include "trinkit/trinity.hpp"

namespace trinkit {

/// Perfect matching of 2n cyclically ordered points: partner[i] = j.
struct ChordDiagram {
  std::vector<int> partner;

  std::size_t size() const { return partner.size() / 2; }
  bool operator==(const ChordDiagram& o) const { return partner == o.partner; }
  bool operator<(const ChordDiagram& o) const { return partner < o.partner; }

  /// Chords as (i, j) with i < j, ascending.
  std::vector<std::pair<int, int>> chords() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < partner.size(); ++i)
      if (static_cast<int>(i) < partner[i]) out.emplace_back(static_cast<int>(i), partner[i]);
    return out;
  }

  static ChordDiagram from_chords(std::size_t n, const std::vector<std::pair<int, int>>& chords) {
    ChordDiagram d;
    d.partner.assign(2 * n, -1);
    for (auto [a, b] : chords) {
      d.partner[static_cast<std::size_t>(a)] = b;
      d.partner[static_cast<std::size_t>(b)] = a;
    }
    return d;
  }
};

inline bool is_perfect_matching(const ChordDiagram& d) {
  const int m = static_cast<int>(d.partner.size());
  if (m == 0 || m % 2) return false;
  for (int i = 0; i < m; ++i) {
    const int j = d.partner[static_cast<std::size_t>(i)];
    if (j < 0 || j >= m || j == i || d.partner[static_cast<std::size_t>(j)] != i) return false;
  }
  return true;
}

inline bool is_non_crossing(const ChordDiagram& d) {
  if (!is_perfect_matching(d)) return false;
  // Stack check: scanning points in order, chords must close in LIFO order.
  std::vector<int> stack;
  for (int i = 0; i < static_cast<int>(d.partner.size()); ++i) {
    const int j = d.partner[static_cast<std::size_t>(i)];
    if (j > i) {
      stack.push_back(i);
    } else {
      if (stack.empty() || stack.back() != j) return false;
      stack.pop_back();
    }
  }
  return true;
}

inline BigInt catalan(std::size_t n) {
  BigInt c(1);
  for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

/// All Catalan(n) non-crossing matchings, ascending by partner vector.
inline std::vector<ChordDiagram> enumerate_chord_diagrams(std::size_t n, long long cap = kDefaultCap) {
  if (n == 0) throw SizeMismatch("chord diagrams need at least one chord");
  if (catalan(n) > cap) throw CapExceeded("Catalan(" + std::to_string(n) + ") exceeds cap");
  std::vector<ChordDiagram> out;
  ChordDiagram cur;
  cur.partner.assign(2 * n, -1);
  std::function<void(int)> rec = [&](int i) {
    while (i < static_cast<int>(2 * n) && cur.partner[static_cast<std::size_t>(i)] != -1) ++i;
    if (i == static_cast<int>(2 * n)) {
      out.push_back(cur);
      return;
    }
    // Pair i with j so that the points strictly between i and j are free and
    // even in number; they get matched among themselves later.
    for (int j = i + 1; j < static_cast<int>(2 * n); j += 2) {
      if (cur.partner[static_cast<std::size_t>(j)] != -1) break;
      cur.partner[static_cast<std::size_t>(i)] = j;
      cur.partner[static_cast<std::size_t>(j)] = i;
      rec(i + 1);
      cur.partner[static_cast<std::size_t>(i)] = -1;
      cur.partner[static_cast<std::size_t>(j)] = -1;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// One diagram per face of G, indexed by face index.
struct Configuration {
  std::vector<ChordDiagram> discs;
  bool operator==(const Configuration& o) const { return discs == o.discs; }
  bool operator<(const Configuration& o) const { return discs < o.discs; }
};

/// Arc signs of face r: +1 violet, -1 emerald.
inline std::vector<int> arc_signs(const Trinity& t, int face) {
  std::vector<int> out;
  for (int d : t.g.face(face).boundary) out.push_back(t.is_violet(t.g.head(d)) ? 1 : -1);
  return out;
}

struct Region {
  int sign = 0;
  std::vector<int> arcs;  // ascending
  int valence() const { return static_cast<int>(arcs.size()); }
};

struct SignedRegions {
  std::vector<Region> regions;  // ordered by smallest arc

  int euler() const {
    int e = 0;
    for (const auto& r : regions) e += r.sign;
    return e;
  }
  std::vector<const Region*> with_sign(int sign) const {
    std::vector<const Region*> out;
    for (const auto& r : regions)
      if (r.sign == sign) out.push_back(&r);
    return out;
  }
};

/// Complementary regions of a diagram with the given arc signs. The region
/// through arc i continues with arc partner(i + 1).
inline SignedRegions signed_regions(const std::vector<int>& signs, const ChordDiagram& d) {
  if (d.partner.size() != signs.size() || !is_non_crossing(d))
    throw SizeMismatch("diagram does not fit a disc with " + std::to_string(signs.size()) + " points");
  const std::size_t m = signs.size();
  SignedRegions out;
  std::vector<char> seen(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (seen[i]) continue;
    Region r;
    r.sign = signs[i];
    std::size_t a = i;
    while (!seen[a]) {
      seen[a] = 1;
      r.arcs.push_back(static_cast<int>(a));
      a = static_cast<std::size_t>(d.partner[(a + 1) % m]);
    }
    std::sort(r.arcs.begin(), r.arcs.end());
    out.regions.push_back(std::move(r));
  }
  return out;
}

inline SignedRegions signed_regions(const Trinity& t, int face, const ChordDiagram& d) {
  return signed_regions(arc_signs(t, face), d);
}

/// Number of positive minus number of negative regions.
inline int disc_euler(const Trinity& t, int face, const ChordDiagram& d) {
  return signed_regions(t, face, d).euler();
}

inline void check_configuration(const Trinity& t, const Configuration& c) {
  if (c.discs.size() != t.num_R()) throw SizeMismatch("configuration needs one diagram per face");
  for (std::size_t f = 0; f < c.discs.size(); ++f)
    if (c.discs[f].size() != static_cast<std::size_t>(t.n_r(static_cast<int>(f))) ||
        !is_non_crossing(c.discs[f]))
      throw SizeMismatch("diagram on face '" + t.g.face(static_cast<int>(f)).id + "' does not fit");
}

struct TightVerdict {
  bool tight = false;
  int curves = 0;
};

/// Glues the chords across the edges of G and counts closed curves. Each dart
/// is a boundary point; chords pair points within a face and each edge joins
/// the points of its two darts.
inline TightVerdict is_tight(const Trinity& t, const Configuration& c) {
  check_configuration(t, c);
  const RotationGraph& g = t.g;
  const std::size_t n = g.num_darts();
  std::vector<char> seen(n, 0);
  TightVerdict v;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++v.curves;
    int d = static_cast<int>(s);
    while (!seen[static_cast<std::size_t>(d)]) {
      seen[static_cast<std::size_t>(d)] = 1;
      const int f = g.face_of(d);
      const int p = c.discs[static_cast<std::size_t>(f)].partner[static_cast<std::size_t>(g.pos_in_face(d))];
      const int mate = g.face(f).boundary[static_cast<std::size_t>(p)];
      seen[static_cast<std::size_t>(mate)] = 1;
      d = g.twin(mate);
    }
  }
  v.tight = v.curves == 1;
  return v;
}

/// Euler class per face index.
inline std::vector<int> euler_vector(const Trinity& t, const Configuration& c) {
  check_configuration(t, c);
  std::vector<int> out;
  for (std::size_t f = 0; f < c.discs.size(); ++f)
    out.push_back(disc_euler(t, static_cast<int>(f), c.discs[f]));
  return out;
}

/// Boundary position of the arc at the corner of G_V edge `gv_edge`.
inline std::pair<int, int> gv_corner(const Trinity& t, int gv_edge) {
  const std::string& id = t.gv.edge(gv_edge).id;  // "gv:<dart>"
  const auto d = t.g.find_dart(id.substr(3));
  if (!d) throw SchemaError("unknown G_V edge '" + id + "'");
  return {t.g.face_of(*d), t.g.pos_in_face(*d)};
}

/// Boundary of a neighbourhood of a spanning tree of G_V. On face r the
/// chosen corners a_1 < .. < a_k get chords (a_i + 1, a_{i+1}) cyclically;
/// every other emerald arc c is cut off by the chord (c, c + 1).
inline Configuration tree_hugging(const Trinity& t, const SpanningTree& tree) {
  if (!is_spanning_tree(t.gv, tree)) throw NotSpanning("tree does not span G_V");
  std::vector<std::vector<int>> chosen(t.num_R());
  for (int e : tree.edges) {
    auto [f, p] = gv_corner(t, e);
    chosen[static_cast<std::size_t>(f)].push_back(p);
  }
  Configuration c;
  for (std::size_t f = 0; f < t.num_R(); ++f) {
    const int face = static_cast<int>(f);
    const std::size_t m = 2 * static_cast<std::size_t>(t.n_r(face));
    auto& a = chosen[f];
    std::sort(a.begin(), a.end());
    ChordDiagram d;
    d.partner.assign(m, -1);
    auto link = [&](std::size_t x, std::size_t y) {
      d.partner[x % m] = static_cast<int>(y % m);
      d.partner[y % m] = static_cast<int>(x % m);
    };
    const auto signs = arc_signs(t, face);
    for (std::size_t i = 0; i < m; ++i)
      if (signs[i] < 0 && !std::binary_search(a.begin(), a.end(), static_cast<int>(i))) link(i, i + 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      link(static_cast<std::size_t>(a[i]) + 1, static_cast<std::size_t>(a[(i + 1) % a.size()]));
    c.discs.push_back(std::move(d));
  }
  return c;
}

struct TreeHuggingVerdict {
  bool tree_hugging = false;
  std::optional<SpanningTree> witness;  // spanning tree of G_V
  std::string reason;
};

/// A tight configuration is tree-hugging when every disc has at most one
/// negative region of valence above 1 and the central negative regions (the
/// largest on each disc) pick out a spanning tree of G_V.
inline TreeHuggingVerdict is_tree_hugging(const Trinity& t, const Configuration& c) {
  if (!is_tight(t, c).tight) throw NotTight("configuration is not tight");
  // G_V edge index by (face, arc position).
  std::map<std::pair<int, int>, int> corner_edge;
  for (std::size_t e = 0; e < t.gv.num_edges(); ++e) corner_edge[gv_corner(t, static_cast<int>(e))] = static_cast<int>(e);
  TreeHuggingVerdict v;
  SpanningTree tree;
  for (std::size_t f = 0; f < c.discs.size(); ++f) {
    const SignedRegions sr = signed_regions(t, static_cast<int>(f), c.discs[f]);
    const auto neg = sr.with_sign(-1);
    const Region* central = nullptr;
    int big = 0;
    for (const Region* r : neg) {
      if (r->valence() > 1) ++big;
      if (!central || r->valence() > central->valence()) central = r;
    }
    if (big > 1) {
      v.reason = "face '" + t.g.face(static_cast<int>(f)).id + "' has " + std::to_string(big) +
                 " negative regions of valence above 1";
      return v;
    }
    for (int a : central->arcs) tree.edges.push_back(corner_edge.at({static_cast<int>(f), a}));
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  if (!is_spanning_tree(t.gv, tree)) {
    v.reason = "central regions do not form a spanning tree of G_V";
    return v;
  }
  v.tree_hugging = true;
  v.witness = tree;
  return v;
}

}  // namespace trinkit
