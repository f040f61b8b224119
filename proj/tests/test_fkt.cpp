#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "trinkit/corpus.hpp"
#include "trinkit/fkt.hpp"

using namespace trinkit;

namespace {

std::string markers(const UniverseState& s) {
  std::string out;
  for (int m : s.marker) out += static_cast<char>('0' + m);
  return out;
}

}  // namespace

TEST(Universe, CorpusIsValid) {
  for (const auto& [name, u] : corpus_universes()) {
    EXPECT_EQ(u.g.num_faces(), u.g.num_vertices() + 2) << name;
    for (const auto& v : u.g.vertices()) EXPECT_EQ(v.rotation.size(), 4u) << name;
    const Universe back = parse_universe(universe_to_json(u));
    EXPECT_EQ(back.stars, u.stars) << name;
    EXPECT_EQ(canonical_code(back.g, false), canonical_code(u.g, false)) << name;
  }
}

TEST(Universe, RejectsBadInput) {
  EXPECT_THROW(make_universe(c4_graph(), {"f0", "f1"}), NotFourRegular);
  const Universe fig8 = figure_eight_universe();
  // Two faces that meet only at a vertex, or a face with itself.
  std::vector<std::string> ids;
  for (const auto& f : fig8.g.faces()) ids.push_back(f.id);
  bool rejected = false;
  for (const auto& a : ids)
    for (const auto& b : ids) {
      bool share = false;
      const int fa = *fig8.g.find_face(a);
      const int fb = *fig8.g.find_face(b);
      for (std::size_t d = 0; d < fig8.g.num_darts(); ++d)
        if (fig8.g.face_of(static_cast<int>(d)) == fa && fig8.g.face_of(fig8.g.twin(static_cast<int>(d))) == fb) share = true;
      if (share && a != b) {
        EXPECT_NO_THROW(make_universe(fig8.g, {a, b}));
      } else {
        EXPECT_THROW(make_universe(fig8.g, {a, b}), StarsNotAdjacent);
        rejected = true;
      }
    }
  EXPECT_TRUE(rejected);
  EXPECT_THROW(make_universe(fig8.g, {"f0", "nope"}), SchemaError);
  json doc = universe_to_json(fig8);
  doc.erase("stars");
  EXPECT_THROW(parse_universe(doc), SchemaError);
}

TEST(States, MatchOracle) {
  const std::map<std::string, std::size_t> expected{{"curl", 1}, {"hopf", 2}, {"trefoil", 3}, {"figure_eight", 5}};
  for (const auto& [name, u] : corpus_universes()) {
    const auto states = enumerate_states(u);
    EXPECT_EQ(states.size(), expected.at(name)) << name;
    std::set<std::vector<int>> got;
    for (const auto& s : states) {
      EXPECT_TRUE(is_state(u, s)) << name;
      got.insert(s.marker);
    }
    EXPECT_EQ(got, oracle::states(u)) << name;
    EXPECT_TRUE(std::is_sorted(states.begin(), states.end()));
  }
  EXPECT_THROW(enumerate_states(figure_eight_universe(), 3), CapExceeded);
}

TEST(States, RejectsNonStates) {
  const Universe u = hopf_universe();
  EXPECT_FALSE(is_state(u, UniverseState{{0}}));
  EXPECT_FALSE(is_state(u, UniverseState{{4, 0}}));
  EXPECT_FALSE(is_state(u, UniverseState{{0, 0}}));
}

TEST(Trails, SplittingsMatchOracleAndRoundTrip) {
  for (const auto& [name, u] : corpus_universes()) {
    std::set<std::vector<int>> splittings;
    for (const auto& s : enumerate_states(u)) {
      const Trail t = state_to_trail(u, s);
      EXPECT_EQ(t.loop.size(), u.g.num_darts() / 2) << name;
      std::set<int> edges;
      for (int d : t.loop) edges.insert(u.g.dart(d).edge);
      EXPECT_EQ(edges.size(), u.g.num_edges()) << name;
      EXPECT_EQ(trail_to_state(u, t), s) << name;
      splittings.insert(t.splitting);
    }
    EXPECT_EQ(splittings, oracle::single_loop_splittings(u)) << name;
  }
}

TEST(Trails, MultiLoopSplittingRejected) {
  const Universe u = hopf_universe();
  bool found = false;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      if (splitting_loops(u, {a, b}) != 1) {
        found = true;
        EXPECT_THROW(splitting_to_trail(u, {a, b}), NotSingleLoop);
      }
  EXPECT_TRUE(found);
}

TEST(Transpositions, CurlHasNone) {
  const Universe u = curl_universe();
  EXPECT_TRUE(transpositions(u, enumerate_states(u).front()).empty());
}

TEST(Transpositions, HopfDirections) {
  const Universe u = hopf_universe();
  const auto states = enumerate_states(u);
  ASSERT_EQ(states.size(), 2u);
  EXPECT_EQ(markers(states[0]), "10");
  EXPECT_EQ(markers(states[1]), "21");
  const auto a = transpositions(u, states[0]);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].first, states[1]);
  EXPECT_EQ(a[0].second, Direction::counterclockwise);
  const auto b = transpositions(u, states[1]);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].first, states[0]);
  EXPECT_EQ(b[0].second, Direction::clockwise);
}

TEST(Transpositions, SymmetricWithOppositeDirection) {
  for (const auto& [name, u] : corpus_universes())
    for (const auto& s : enumerate_states(u))
      for (const auto& [next, dir] : transpositions(u, s)) {
        EXPECT_TRUE(is_state(u, next)) << name;
        bool back = false;
        for (const auto& [prev, d2] : transpositions(u, next))
          if (prev == s && d2 != dir) back = true;
        EXPECT_TRUE(back) << name;
      }
}

TEST(Clock, ReportsHold) {
  const std::map<std::string, std::size_t> arcs{{"curl", 0}, {"hopf", 1}, {"trefoil", 2}, {"figure_eight", 5}};
  for (const auto& [name, u] : corpus_universes()) {
    const ClockGraph cg = clock_graph(u, kDefaultCap, true);
    EXPECT_TRUE(cg.report.ok()) << name;
    EXPECT_TRUE(cg.report.acyclic);
    EXPECT_TRUE(cg.report.weakly_connected);
    EXPECT_TRUE(cg.report.unique_source);
    EXPECT_TRUE(cg.report.unique_sink);
    ASSERT_TRUE(cg.report.lattice.has_value());
    EXPECT_TRUE(*cg.report.lattice);
    EXPECT_EQ(cg.arcs.size(), arcs.at(name)) << name;
  }
  EXPECT_FALSE(clock_graph(hopf_universe()).report.lattice.has_value());
}

TEST(Dual, HopfIsFourCycle) {
  const RotationGraph d = universe_dual_graph(hopf_universe());
  EXPECT_TRUE(isomorphic(d, c4_graph(), false));
  EXPECT_TRUE(validate_bipartite_plane(d).ok());
}

TEST(Dual, Shapes) {
  const RotationGraph curl = universe_dual_graph(curl_universe());
  EXPECT_EQ(curl.num_vertices(), 3u);
  EXPECT_EQ(curl.num_edges(), 2u);
  ASSERT_EQ(curl.num_faces(), 1u);
  EXPECT_EQ(curl.face(0).boundary.size(), 4u);
  const RotationGraph fig8 = universe_dual_graph(figure_eight_universe());
  EXPECT_EQ(fig8.num_vertices(), 6u);
  EXPECT_EQ(fig8.num_edges(), 8u);
  EXPECT_EQ(fig8.num_faces(), 4u);
  for (const auto& f : fig8.faces()) EXPECT_EQ(f.boundary.size(), 4u);
}

TEST(Correspondence, StatesMatchTightConfigurations) {
  for (const auto& [name, u] : corpus_universes()) {
    const Correspondence c = states_vs_configurations(u);
    EXPECT_TRUE(c.ok()) << name;
    EXPECT_EQ(c.states, c.tight_configurations) << name;
    EXPECT_EQ(c.magic, BigInt(c.states)) << name;
    EXPECT_EQ(c.pairs.size(), c.states) << name;
  }
}
