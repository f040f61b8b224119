#pragma once

// Bypass moves, the configuration graph of tight configurations and its
// classification by hypertrees.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "trinkit/dividing.hpp"
#include "trinkit/hypertrees.hpp"

namespace trinkit {

struct BypassMove {
  std::array<int, 6> points{};  // q0 < .. < q5, endpoints of the three chords
  int direction = 0;            // +1 forward along the hexagon cycle, -1 back
  ChordDiagram result;
};

namespace detail {

using Pattern = std::array<std::array<int, 2>, 3>;

// Rotation patterns on q0..q5; each is one click from the next.
inline const std::array<Pattern, 3>& bypass_patterns() {
  static const std::array<Pattern, 3> p{{
      {{{0, 3}, {1, 2}, {4, 5}}},
      {{{0, 5}, {1, 4}, {2, 3}}},
      {{{0, 1}, {2, 5}, {3, 4}}},
  }};
  return p;
}

inline int match_pattern(const ChordDiagram& d, const std::array<int, 6>& q) {
  const auto& pats = bypass_patterns();
  for (int k = 0; k < 3; ++k) {
    bool ok = true;
    for (const auto& pr : pats[static_cast<std::size_t>(k)])
      if (d.partner[static_cast<std::size_t>(q[static_cast<std::size_t>(pr[0])])] != q[static_cast<std::size_t>(pr[1])]) ok = false;
    if (ok) return k;
  }
  return -1;
}

}  // namespace detail

/// Every move re-matching three chords whose endpoints form one of the
/// rotation patterns into either of the other two, when the result is still
/// non-crossing. Ordered by chord triple, then direction (+1 first).
inline std::vector<BypassMove> bypass_move_list(const ChordDiagram& d) {
  std::vector<BypassMove> out;
  const auto chords = d.chords();
  const std::size_t k = chords.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      for (std::size_t c = b + 1; c < k; ++c) {
        std::array<int, 6> q{chords[a].first, chords[a].second, chords[b].first,
                             chords[b].second, chords[c].first, chords[c].second};
        std::sort(q.begin(), q.end());
        const int from = detail::match_pattern(d, q);
        if (from < 0) continue;
        for (int dir : {1, -1}) {
          const int to = (from + dir + 3) % 3;
          BypassMove mv;
          mv.points = q;
          mv.direction = dir;
          mv.result = d;
          for (const auto& pr : detail::bypass_patterns()[static_cast<std::size_t>(to)]) {
            const int x = q[static_cast<std::size_t>(pr[0])];
            const int y = q[static_cast<std::size_t>(pr[1])];
            mv.result.partner[static_cast<std::size_t>(x)] = y;
            mv.result.partner[static_cast<std::size_t>(y)] = x;
          }
          if (is_non_crossing(mv.result)) out.push_back(std::move(mv));
        }
      }
  return out;
}

/// Distinct diagrams one bypass move away.
inline std::vector<ChordDiagram> bypass_moves(const ChordDiagram& d) {
  std::set<ChordDiagram> seen;
  for (auto& mv : bypass_move_list(d)) seen.insert(std::move(mv.result));
  return {seen.begin(), seen.end()};
}

/// Tight configurations; two are adjacent when they differ on exactly one
/// face. Adjacency is stored as cliques (one per group sharing all other
/// faces) rather than as an explicit edge list.
struct ConfigurationGraph {
  std::vector<std::vector<ChordDiagram>> diagrams;  // per face, all diagrams
  std::vector<std::vector<int>> vertices;          // diagram index per face, ascending
  std::vector<std::vector<int>> cliques;
  std::vector<int> component;  // per vertex; ids ordered by smallest member
  std::size_t num_components = 0;
  long long num_edges = 0;
  long long total_configurations = 0;

  Configuration configuration(std::size_t v) const {
    Configuration c;
    for (std::size_t f = 0; f < diagrams.size(); ++f)
      c.discs.push_back(diagrams[f][static_cast<std::size_t>(vertices[v][f])]);
    return c;
  }
  std::optional<std::size_t> find(const Configuration& c) const {
    std::vector<int> key;
    for (std::size_t f = 0; f < diagrams.size(); ++f) {
      auto it = std::lower_bound(diagrams[f].begin(), diagrams[f].end(), c.discs[f]);
      if (it == diagrams[f].end() || !(*it == c.discs[f])) return std::nullopt;
      key.push_back(static_cast<int>(it - diagrams[f].begin()));
    }
    auto it = std::lower_bound(vertices.begin(), vertices.end(), key);
    if (it == vertices.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
  }
  static bool adjacent(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t diff = 0;
    for (std::size_t f = 0; f < a.size(); ++f) diff += a[f] != b[f];
    return diff == 1;
  }
};

namespace detail {

class Dsu {
 public:
  explicit Dsu(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

/// Filters the product of all per-face diagrams by tightness; `jobs` threads
/// share the product range.
inline ConfigurationGraph build_configuration_graph(const Trinity& t, long long cap = kDefaultCap,
                                                    unsigned jobs = 1) {
  ConfigurationGraph cg;
  BigInt total(1);
  for (std::size_t f = 0; f < t.num_R(); ++f) {
    total *= catalan(static_cast<std::size_t>(t.n_r(static_cast<int>(f))));
    if (total > cap) throw CapExceeded("configuration count exceeds cap " + std::to_string(cap));
  }
  for (std::size_t f = 0; f < t.num_R(); ++f)
    cg.diagrams.push_back(enumerate_chord_diagrams(static_cast<std::size_t>(t.n_r(static_cast<int>(f))), cap));
  cg.total_configurations = static_cast<long long>(total);
  const std::size_t faces = cg.diagrams.size();

  auto decode = [&](long long idx) {
    std::vector<int> key(faces);
    for (std::size_t f = faces; f-- > 0;) {
      const long long base = static_cast<long long>(cg.diagrams[f].size());
      key[f] = static_cast<int>(idx % base);
      idx /= base;
    }
    return key;
  };
  auto tight = [&](const std::vector<int>& key) {
    Configuration c;
    for (std::size_t f = 0; f < faces; ++f) c.discs.push_back(cg.diagrams[f][static_cast<std::size_t>(key[f])]);
    return is_tight(t, c).tight;
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, 64));
  std::vector<std::vector<std::vector<int>>> shards(jobs);
  auto work = [&](unsigned j) {
    const long long lo = cg.total_configurations * j / jobs;
    const long long hi = cg.total_configurations * (j + 1) / jobs;
    for (long long i = lo; i < hi; ++i) {
      auto key = decode(i);
      if (tight(key)) shards[j].push_back(std::move(key));
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
    for (auto& th : pool) th.join();
  }
  for (auto& s : shards)
    for (auto& key : s) cg.vertices.push_back(std::move(key));

  detail::Dsu dsu(cg.vertices.size());
  for (std::size_t f = 0; f < faces; ++f) {
    std::map<std::vector<int>, std::vector<int>> groups;
    for (std::size_t v = 0; v < cg.vertices.size(); ++v) {
      std::vector<int> rest = cg.vertices[v];
      rest.erase(rest.begin() + static_cast<long>(f));
      groups[rest].push_back(static_cast<int>(v));
    }
    for (auto& [_, members] : groups) {
      if (members.size() < 2) continue;
      const long long k = static_cast<long long>(members.size());
      cg.num_edges += k * (k - 1) / 2;
      for (int m : members) dsu.unite(members.front(), m);
      cg.cliques.push_back(std::move(members));
    }
  }
  std::map<int, int> ids;
  cg.component.resize(cg.vertices.size());
  for (std::size_t v = 0; v < cg.vertices.size(); ++v) {
    const int root = dsu.find(static_cast<int>(v));
    auto it = ids.emplace(root, static_cast<int>(ids.size())).first;
    cg.component[v] = it->second;
  }
  cg.num_components = ids.size();
  return cg;
}

struct ComponentInfo {
  int id = 0;
  std::size_t size = 0;
  std::vector<int> euler;      // per face index
  std::vector<int> hypertree;  // per face index, f(r) = (e_r + n_r - 1) / 2
  std::size_t representative = 0;  // vertex of the graph, tree-hugging
  SpanningTree representative_tree;
};

struct Classification {
  std::vector<ComponentInfo> components;
  bool bijection_ok = false;
  std::string reason;
};

/// Labels every component by its Euler vector and hypertree and checks the
/// labels against the hypertrees of (E, R). Throws EulerNotConstant or
/// NotTreeHuggingReachable when the model breaks.
inline Classification classify_components(const Trinity& t, const ConfigurationGraph& cg,
                                          long long cap = kDefaultCap) {
  Classification out;
  out.components.resize(cg.num_components);
  std::vector<char> seen(cg.num_components, 0);
  for (std::size_t v = 0; v < cg.vertices.size(); ++v) {
    ComponentInfo& info = out.components[static_cast<std::size_t>(cg.component[v])];
    const Configuration c = cg.configuration(v);
    const std::vector<int> e = euler_vector(t, c);
    if (!seen[static_cast<std::size_t>(cg.component[v])]) {
      seen[static_cast<std::size_t>(cg.component[v])] = 1;
      info.id = cg.component[v];
      info.euler = e;
    } else if (info.euler != e) {
      throw EulerNotConstant("component " + std::to_string(info.id) + " mixes Euler vectors");
    }
    ++info.size;
  }
  const Hypergraph er = make_hypergraph(t, "ER");
  const HypertreeSet b_er = enumerate_hypertrees(er, cap);
  const std::vector<int> by_id = t.faces_by_id();
  std::set<std::vector<int>> labels;
  bool ok = true;
  for (auto& info : out.components) {
    for (std::size_t f = 0; f < info.euler.size(); ++f)
      info.hypertree.push_back((info.euler[f] + t.n_r(static_cast<int>(f)) - 1) / 2);
    bool found = false;
    for (std::size_t v = 0; v < cg.vertices.size() && !found; ++v) {
      if (cg.component[v] != info.id) continue;
      TreeHuggingVerdict th = is_tree_hugging(t, cg.configuration(v));
      if (!th.tree_hugging) continue;
      found = true;
      info.representative = v;
      info.representative_tree = *th.witness;
    }
    if (!found)
      throw NotTreeHuggingReachable("component " + std::to_string(info.id) + " has no tree-hugging member");
    std::vector<int> sorted_f;
    for (int f : by_id) sorted_f.push_back(info.hypertree[static_cast<std::size_t>(f)]);
    if (hypertree_of(t.gv, info.representative_tree, Colour::red) != sorted_f) {
      ok = false;
      out.reason = "representative tree disagrees with the Euler vector of component " + std::to_string(info.id);
    }
    if (!b_er.contains(sorted_f)) {
      ok = false;
      out.reason = "component " + std::to_string(info.id) + " maps outside the hypertrees of (E,R)";
    }
    if (!labels.insert(sorted_f).second) {
      ok = false;
      out.reason = "two components share a hypertree";
    }
  }
  if (ok && labels.size() != b_er.count()) {
    ok = false;
    out.reason = std::to_string(labels.size()) + " components for " + std::to_string(b_er.count()) + " hypertrees";
  }
  out.bijection_ok = ok;
  return out;
}

inline void require_bijection(const Classification& c) {
  if (!c.bijection_ok) throw NotBijective(c.reason);
}

namespace detail {

inline int max_negative_valence(const SignedRegions& sr) {
  int best = 0;
  for (const Region* r : sr.with_sign(-1)) best = std::max(best, r->valence());
  return best;
}

inline int big_negative_regions(const SignedRegions& sr) {
  int big = 0;
  for (const Region* r : sr.with_sign(-1)) big += r->valence() > 1;
  return big;
}

}  // namespace detail

/// From a tight configuration, applies bypass moves face by face, each one
/// keeping tightness and raising the largest negative valence on its face,
/// until every face has at most one negative region of valence above 1.
/// The returned path starts with `start` and ends tree-hugging; throws Stuck
/// when no such move exists.
inline std::vector<Configuration> valence_concentration_path(const Trinity& t, const Configuration& start) {
  if (!is_tight(t, start).tight) throw NotTight("configuration is not tight");
  std::vector<Configuration> path{start};
  Configuration cur = start;
  for (std::size_t f = 0; f < cur.discs.size(); ++f) {
    const int face = static_cast<int>(f);
    for (;;) {
      const SignedRegions sr = signed_regions(t, face, cur.discs[f]);
      if (detail::big_negative_regions(sr) <= 1) break;
      const int current = detail::max_negative_valence(sr);
      bool moved = false;
      for (const auto& mv : bypass_move_list(cur.discs[f])) {
        Configuration next = cur;
        next.discs[f] = mv.result;
        if (detail::max_negative_valence(signed_regions(t, face, mv.result)) <= current) continue;
        if (!is_tight(t, next).tight) continue;
        cur = std::move(next);
        path.push_back(cur);
        moved = true;
        break;
      }
      if (!moved)
        throw Stuck("no valence-raising tight bypass on face '" + t.g.face(face).id + "'");
    }
  }
  if (!is_tree_hugging(t, cur).tree_hugging) throw Stuck("final configuration is not tree-hugging");
  return path;
}

}  // namespace trinkit
