#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "trinkit/corpus.hpp"
#include "trinkit/hypertrees.hpp"
#include "trinkit/magic.hpp"
#include "trinkit/trees.hpp"

using namespace trinkit;

namespace {

std::vector<Colour> all_colours() { return {Colour::violet, Colour::emerald, Colour::red}; }

// Face-indexed record of a G_V tree at the red vertices, in sorted face-id order.
std::vector<int> red_record(const Trinity& t, const SpanningTree& tree) {
  return hypertree_of(t.gv, tree, Colour::red);
}

}  // namespace

TEST(Trees, SpanningTreeCountsMatchOracle) {
  for (const auto& [name, g] : corpus_graphs()) {
    const Trinity t = build_trinity(g);
    for (Colour c : all_colours()) {
      const RotationGraph& cg = colour_graph(t, c);
      const auto brute = oracle::spanning_trees(cg);
      EXPECT_EQ(count_spanning_trees(cg), BigInt(brute.size())) << name;
      const auto listed = enumerate_spanning_trees(cg);
      std::set<std::vector<int>> got;
      for (const auto& tr : listed) got.insert(tr.edges);
      EXPECT_EQ(got.size(), listed.size()) << name << ": duplicates";
      EXPECT_EQ(got, brute) << name;
    }
  }
}

TEST(Trees, SmallTreeCounts) {
  EXPECT_EQ(enumerate_spanning_trees(single_edge_graph()).size(), 1u);
  EXPECT_EQ(enumerate_spanning_trees(c4_graph()).size(), 4u);
}

TEST(Trees, EnumerationOrderIsDeterministic) {
  const RotationGraph g = running_example_graph();
  EXPECT_EQ(enumerate_spanning_trees(g), enumerate_spanning_trees(g));
}

TEST(Trees, FourCycleVioletGraphDegreeRecords) {
  const Trinity t = build_trinity(c4_graph());
  std::map<std::vector<int>, int> records;
  for (const auto& tr : enumerate_spanning_trees(t.gv)) {
    auto rec = degree_record(t.gv, tr, Colour::red);
    std::vector<int> v;
    for (const auto& [_, d] : rec) v.push_back(d);
    ++records[v];
  }
  EXPECT_EQ(records, (std::map<std::vector<int>, int>{{{1, 2}, 2}, {{2, 1}, 2}}));
}

TEST(Trees, CapExceeded) {
  EXPECT_THROW(enumerate_spanning_trees(running_example_graph(), 10), CapExceeded);
  const Trinity t = build_trinity(running_example_graph());
  EXPECT_THROW(enumerate_arborescences(t.dual_v, "v0", 5), CapExceeded);
}

TEST(Arborescences, LoopGraphHasTheEmptyArborescence) {
  const Trinity t = build_trinity(single_edge_graph());
  const DirectedDual& d = t.dual_v;
  EXPECT_EQ(count_arborescences(d, d.vertices[0]), BigInt(1));
  const auto list = enumerate_arborescences(d, d.vertices[0]);
  ASSERT_EQ(list.size(), 1u);
  EXPECT_TRUE(list[0].arcs.empty());
}

TEST(Arborescences, FourCycleRedDual) {
  const Trinity t = build_trinity(c4_graph());
  const DirectedDual& d = t.dual_r;
  for (const auto& root : d.vertices) {
    EXPECT_EQ(count_arborescences(d, root), BigInt(2));
    const auto list = enumerate_arborescences(d, root);
    ASSERT_EQ(list.size(), 2u);
    for (const auto& a : list) {
      ASSERT_EQ(a.arcs.size(), 1u);
      EXPECT_EQ(d.vertices[static_cast<std::size_t>(d.arcs[static_cast<std::size_t>(a.arcs[0])].tail)], root);
    }
  }
}

TEST(Arborescences, UnknownRoot) {
  const Trinity t = build_trinity(c4_graph());
  EXPECT_THROW(count_arborescences(t.dual_v, "nope"), UnknownRoot);
  EXPECT_THROW(enumerate_arborescences(t.dual_v, "nope"), UnknownRoot);
}

TEST(Arborescences, RootIndependentAndMatchOracle) {
  for (const auto& [name, g] : corpus_graphs()) {
    const Trinity t = build_trinity(g);
    BigInt common = -1;
    for (Colour c : all_colours()) {
      const DirectedDual& d = directed_dual(t, c);
      for (std::size_t r = 0; r < d.vertices.size(); ++r) {
        const BigInt det = count_arborescences(d, d.vertices[r]);
        if (common < 0) common = det;
        EXPECT_EQ(det, common) << name << " " << colour_name(c) << " root " << d.vertices[r];
        EXPECT_EQ(BigInt(enumerate_arborescences(d, d.vertices[r]).size()), det) << name;
        if (d.arcs.size() <= 14) EXPECT_EQ(BigInt(oracle::arborescences(d, static_cast<int>(r))), det) << name;
      }
    }
  }
}

TEST(Arborescences, EnumeratedArcsFormArborescences) {
  const Trinity t = build_trinity(running_example_graph());
  const DirectedDual& d = t.dual_e;
  const std::string root = d.min_vertex();
  std::set<std::vector<int>> seen;
  for (const auto& a : enumerate_arborescences(d, root)) {
    EXPECT_TRUE(seen.insert(a.arcs).second);
    std::vector<int> indeg(d.vertices.size(), 0);
    for (int arc : a.arcs) ++indeg[static_cast<std::size_t>(d.arcs[static_cast<std::size_t>(arc)].head)];
    for (std::size_t v = 0; v < indeg.size(); ++v)
      EXPECT_EQ(indeg[v], static_cast<int>(v) == a.root ? 0 : 1);
  }
}

TEST(Magic, SingleEdgeAllOne) {
  const MagicReport m = magic_number(build_trinity(single_edge_graph()));
  EXPECT_TRUE(m.agree);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(m.det[i], BigInt(1));
    ASSERT_TRUE(m.enumerated[i].has_value());
    EXPECT_EQ(*m.enumerated[i], BigInt(1));
  }
  for (const auto& [k, v] : m.hypertrees) EXPECT_EQ(v.value_or(-1), 1) << k;
}

TEST(Magic, FourCycleIsTwo) {
  const MagicReport m = magic_number(build_trinity(c4_graph()));
  EXPECT_TRUE(m.agree);
  EXPECT_EQ(m.value(), BigInt(2));
}

TEST(Magic, RunningExampleGoldenValue) {
  const MagicReport m = magic_number(build_trinity(running_example_graph()));
  EXPECT_TRUE(m.agree);
  EXPECT_EQ(m.value(), BigInt(11));
  for (const auto& [k, v] : m.hypertrees) EXPECT_EQ(v.value_or(-1), 11) << k;
}

TEST(Magic, SlotsOverCapStayEmpty) {
  const MagicReport m = magic_number(build_trinity(running_example_graph()), 5);
  EXPECT_FALSE(m.enumerated[0].has_value());
  EXPECT_EQ(m.det[0], BigInt(11));
  EXPECT_TRUE(m.agree);
}

TEST(Exchange, EqualTreesGiveEmptyPath) {
  const Trinity t = build_trinity(c4_graph());
  const auto trees = enumerate_spanning_trees(t.gv);
  EXPECT_TRUE(tree_exchange_path(t.gv, trees[0], trees[0], Colour::red).empty());
}

TEST(Exchange, FourCycleSameRecordOneStep) {
  const Trinity t = build_trinity(c4_graph());
  std::map<std::vector<int>, std::vector<SpanningTree>> by_record;
  for (const auto& tr : enumerate_spanning_trees(t.gv)) by_record[red_record(t, tr)].push_back(tr);
  for (const auto& [rec, trees] : by_record) {
    ASSERT_EQ(trees.size(), 2u);
    const auto path = tree_exchange_path(t.gv, trees[0], trees[1], Colour::red);
    ASSERT_EQ(path.size(), 1u);
    EXPECT_EQ(path.back(), trees[1]);
  }
}

TEST(Exchange, DifferentRecordsRejected) {
  const Trinity t = build_trinity(c4_graph());
  std::map<std::vector<int>, SpanningTree> one;
  for (const auto& tr : enumerate_spanning_trees(t.gv)) one.emplace(red_record(t, tr), tr);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_THROW(tree_exchange_path(t.gv, one.begin()->second, one.rbegin()->second, Colour::red),
               SameHypertreeRequired);
}

TEST(Exchange, PathsExistForEverySameRecordPair) {
  for (const auto& [name, g] : corpus_graphs()) {
    const Trinity t = build_trinity(g);
    std::map<std::vector<int>, std::vector<SpanningTree>> by_record;
    for (const auto& tr : enumerate_spanning_trees(t.gv)) by_record[red_record(t, tr)].push_back(tr);
    for (const auto& [rec, trees] : by_record)
      for (std::size_t i = 1; i < trees.size(); ++i) {
        const auto path = tree_exchange_path(t.gv, trees[0], trees[i], Colour::red);
        ASSERT_FALSE(path.empty()) << name;
        EXPECT_EQ(path.back(), trees[i]) << name;
        SpanningTree prev = trees[0];
        for (const auto& step : path) {
          EXPECT_TRUE(is_spanning_tree(t.gv, step)) << name;
          EXPECT_EQ(red_record(t, step), rec) << name;
          std::vector<int> diff;
          std::set_difference(step.edges.begin(), step.edges.end(), prev.edges.begin(), prev.edges.end(),
                              std::back_inserter(diff));
          EXPECT_EQ(diff.size(), 1u) << name;
          prev = step;
        }
      }
  }
}

TEST(Hypertrees, SingleEdgeER) {
  const Trinity t = build_trinity(single_edge_graph());
  const HypertreeSet s = enumerate_hypertrees(make_hypergraph(t, "ER"));
  EXPECT_EQ(s.count(), 1u);
  EXPECT_TRUE(s.contains({0}));
}

TEST(Hypertrees, FourCycleER) {
  const Trinity t = build_trinity(c4_graph());
  const HypertreeSet s = enumerate_hypertrees(make_hypergraph(t, "ER"));
  EXPECT_EQ(s.count(), 2u);
  EXPECT_TRUE(s.contains({1, 0}));
  EXPECT_TRUE(s.contains({0, 1}));
}

TEST(Hypertrees, FourCycleTreeMissingOneEdge) {
  const Trinity t = build_trinity(c4_graph());
  // Dropping one G_V edge leaves its red end with degree 1, the other with 2.
  for (std::size_t drop = 0; drop < t.gv.num_edges(); ++drop) {
    SpanningTree tree;
    for (std::size_t e = 0; e < t.gv.num_edges(); ++e)
      if (e != drop) tree.edges.push_back(static_cast<int>(e));
    const auto f = hypertree_of(t.gv, tree, Colour::red);
    const auto& ed = t.gv.edge(static_cast<int>(drop));
    int red_end = t.gv.tail(ed.darts[0]);
    if (t.gv.vertex(red_end).colour != Colour::red) red_end = t.gv.tail(ed.darts[1]);
    const auto faces = t.faces_by_id();
    for (std::size_t i = 0; i < faces.size(); ++i)
      EXPECT_EQ(f[i], t.g.face(faces[i]).id == t.gv.vertex(red_end).id ? 0 : 1);
  }
}

TEST(Hypertrees, StarCentre) {
  // Path v-e-v: the emerald vertex is the only hyperedge, of degree 2.
  const RotationGraph g = generate_corpus("path", 2);
  const SpanningTree all{{0, 1}};
  EXPECT_EQ(hypertree_of(g, all, Colour::emerald), (std::vector<int>{1}));
  EXPECT_EQ(hypertree_of(g, all, Colour::violet), (std::vector<int>{0, 0}));
  EXPECT_THROW(hypertree_of(g, all, Colour::red), WrongClass);
}

TEST(Hypertrees, SixCountsAndIdentities) {
  for (const auto& [name, g] : corpus_graphs()) {
    const Trinity t = build_trinity(g);
    const auto sets = enumerate_all_hypertrees(t);
    const BigInt magic = count_arborescences(t.dual_v, t.dual_v.min_vertex());
    for (const auto& key : hypergraph_keys()) {
      const HypertreeSet& s = sets.at(key);
      EXPECT_EQ(BigInt(s.count()), magic) << name << " " << key;
      const Hypergraph h = make_hypergraph(t, key);
      EXPECT_EQ(enumerate_hypertrees(h).vectors.size(), s.count()) << name << " " << key;
      for (const auto& [f, witness] : s.vectors) {
        EXPECT_EQ(std::accumulate(f.begin(), f.end(), 0) + 1, static_cast<int>(h.num_vertices())) << name << " " << key;
        for (std::size_t i = 0; i < f.size(); ++i) {
          EXPECT_GE(f[i], 0);
          EXPECT_LE(f[i] + 1, static_cast<int>(h.bip.degree(h.hyperedges[i])));
        }
        EXPECT_EQ(hypertree_of(h.bip, witness, h.hyperedge_class), f);
        EXPECT_TRUE(realize_hypertree(h, f).has_value()) << name << " " << key;
      }
    }
    EXPECT_EQ(sets.at("VE").count(), sets.at("EV").count()) << name;
    for (const auto& f : sets.at("ER").vectors)
      EXPECT_EQ(std::accumulate(f.first.begin(), f.first.end(), 0), static_cast<int>(t.num_E()) - 1) << name;
    for (const auto& pr : dual_hypergraph_pairs())
      EXPECT_TRUE(translate_offset(sets.at(pr[0]), sets.at(pr[1])).has_value()) << name << " " << pr[0] << "/" << pr[1];
  }
}

TEST(Hypertrees, RealizeRejectsNonMembers) {
  const Trinity t = build_trinity(c4_graph());
  const Hypergraph h = make_hypergraph(t, "ER");
  EXPECT_FALSE(realize_hypertree(h, {1, 1}).has_value());
  EXPECT_FALSE(realize_hypertree(h, {0, 0}).has_value());
  const auto tree = realize_hypertree(h, {1, 0});
  ASSERT_TRUE(tree.has_value());
  EXPECT_EQ(hypertree_of(h.bip, *tree, Colour::red), (std::vector<int>{1, 0}));
  EXPECT_THROW(realize_hypertree(h, {1}), SizeMismatch);
}

TEST(Hypertrees, TranslateOffset) {
  HypertreeSet a{"A", {"x"}, {{{0}, {}}}};
  HypertreeSet b{"B", {"x"}, {{{0}, {}}}};
  EXPECT_EQ(translate_offset(a, b), std::optional<std::vector<int>>(std::vector<int>{0}));

  const Trinity t = build_trinity(c4_graph());
  const auto sets = enumerate_all_hypertrees(t);
  EXPECT_TRUE(translate_offset(sets.at("VE"), sets.at("RE")).has_value());

  HypertreeSet one{"A", {"x", "y"}, {{{0, 0}, {}}}};
  HypertreeSet two{"B", {"x", "y"}, {{{0, 0}, {}}, {{1, 1}, {}}}};
  EXPECT_FALSE(translate_offset(one, two).has_value());
  HypertreeSet skew{"C", {"x", "y"}, {{{0, 0}, {}}, {{1, 0}, {}}}};
  EXPECT_FALSE(translate_offset(two, skew).has_value());
  HypertreeSet other{"D", {"x", "z"}, {{{0, 0}, {}}}};
  EXPECT_THROW(translate_offset(one, other), IndexMismatch);
}
