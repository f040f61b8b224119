#pragma once

// JSON reports and the cross-identity verification suite.

#include <chrono>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "trinkit/fkt.hpp"
#include "trinkit/graph_json.hpp"
#include "trinkit/hypertrees.hpp"
#include "trinkit/magic.hpp"
#include "trinkit/transitions.hpp"

namespace trinkit {

inline json census_json(const Census& c) {
  json nr = json::object();
  for (const auto& [id, k] : c.n_r) nr[id] = k;
  return {{"V", c.V}, {"E", c.E}, {"R", c.R}, {"n", c.n}, {"n_r", nr}, {"euler_ok", c.euler_ok()}};
}

inline json magic_json(const MagicReport& m) {
  static const char* names[3] = {"violet", "emerald", "red"};
  json det = json::object(), en = json::object(), hy = json::object();
  for (std::size_t i = 0; i < 3; ++i) {
    det[names[i]] = to_decimal(m.det[i]);
    en[names[i]] = m.enumerated[i] ? json(to_decimal(*m.enumerated[i])) : json(nullptr);
  }
  for (const auto& [k, v] : m.hypertrees) hy[k] = v ? json(*v) : json(nullptr);
  return {{"det", det}, {"enum", en}, {"hypertrees", hy}, {"agree", m.agree}};
}

inline json hypertree_set_json(const HypertreeSet& s) {
  json vs = json::array();
  for (const auto& [v, _] : s.vectors) vs.push_back(v);
  return {{"hypergraph", s.key}, {"hyperedges", s.hyperedge_ids}, {"vectors", vs}, {"count", s.count()}};
}

inline json face_map_json(const Trinity& t, const std::vector<int>& per_face) {
  json out = json::object();
  for (std::size_t f = 0; f < per_face.size(); ++f) out[t.g.face(static_cast<int>(f)).id] = per_face[f];
  return out;
}

inline json configuration_json(const Trinity& t, const Configuration& c) {
  json faces = json::object();
  for (std::size_t f = 0; f < c.discs.size(); ++f) {
    json m = json::array();
    for (auto [a, b] : c.discs[f].chords()) m.push_back({a, b});
    faces[t.g.face(static_cast<int>(f)).id] = {{"matching", m}};
  }
  return {{"faces", faces}, {"tight", is_tight(t, c).tight}, {"euler", face_map_json(t, euler_vector(t, c))}};
}

inline json classification_json(const Trinity& t, const ConfigurationGraph& cg, const Classification& cl) {
  json comps = json::array();
  for (const auto& c : cl.components)
    comps.push_back({{"id", c.id},
                     {"size", c.size},
                     {"euler", face_map_json(t, c.euler)},
                     {"hypertree", face_map_json(t, c.hypertree)},
                     {"tree_hugging_rep", configuration_json(t, cg.configuration(c.representative))}});
  json out = {{"components", comps}, {"bijection_ok", cl.bijection_ok}};
  if (!cl.bijection_ok) out["reason"] = cl.reason;
  return out;
}

inline json state_json(const Universe& u, const UniverseState& s) {
  json m = json::object();
  for (std::size_t v = 0; v < s.marker.size(); ++v) m[u.g.vertex(static_cast<int>(v)).id] = s.marker[v];
  return {{"markers", m}};
}

inline json clock_json(const Universe& u, const ClockGraph& cg) {
  json states = json::array(), arcs = json::array();
  for (const auto& s : cg.states) states.push_back(state_json(u, s));
  for (auto [a, b] : cg.arcs) arcs.push_back({a, b});
  json rep = {{"acyclic", cg.report.acyclic},
              {"weakly_connected", cg.report.weakly_connected},
              {"unique_source", cg.report.unique_source},
              {"unique_sink", cg.report.unique_sink}};
  if (cg.report.lattice) rep["lattice"] = *cg.report.lattice;
  return {{"states", states}, {"arcs", arcs}, {"report", rep}, {"ok", cg.report.ok()}};
}

inline json correspondence_json(const Universe& u, const Correspondence& c) {
  json pairs = json::array();
  for (const auto& [s, v] : c.pairs) pairs.push_back({{"state", state_json(u, s)}, {"configuration", v}});
  return {{"states", c.states},
          {"tight_configurations", c.tight_configurations},
          {"magic", to_decimal(c.magic)},
          {"bijective", c.bijective},
          {"counts_agree", c.counts_agree},
          {"pairs", pairs}};
}

struct StageResult {
  std::string name;
  bool pass = false;
  json report;
  double millis = 0;
};

struct VerificationSuite {
  std::string instance;
  std::vector<StageResult> stages;
  bool pass() const {
    return std::all_of(stages.begin(), stages.end(), [](const StageResult& s) { return s.pass; });
  }
  json to_json(bool timing) const {
    json st = json::array();
    for (const auto& s : stages) {
      json j = {{"stage", s.name}, {"pass", s.pass}, {"report", s.report}};
      if (timing) j["millis"] = s.millis;
      st.push_back(j);
    }
    return {{"instance", instance}, {"stages", st}, {"pass", pass()}};
  }
};

struct VerifyOptions {
  long long cap = kDefaultCap;
  unsigned jobs = 1;
};

namespace detail {

inline void run_stage(VerificationSuite& suite, const std::string& name, const std::function<bool(json&)>& body) {
  StageResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  r.pass = body(r.report);
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  suite.stages.push_back(std::move(r));
}

}  // namespace detail

/// Census, magic number, hypertree identities, configuration classification
/// and tree-hugging reachability for one bipartite plane graph.
inline VerificationSuite verify_graph(const RotationGraph& g, const std::string& instance,
                                      const VerifyOptions& opt = {}) {
  VerificationSuite suite{instance, {}};
  const Trinity t = build_trinity(g);
  detail::run_stage(suite, "census", [&](json& rep) {
    const Census c = trinity_census(t);
    rep = census_json(c);
    return c.euler_ok();
  });
  const MagicReport magic = magic_number(t, opt.cap);
  detail::run_stage(suite, "magic", [&](json& rep) {
    rep = magic_json(magic);
    rep["value"] = to_decimal(magic.value());
    return magic.agree;
  });
  const auto sets = enumerate_all_hypertrees(t, opt.cap);
  detail::run_stage(suite, "hypertrees", [&](json& rep) {
    bool ok = true;
    json counts = json::object();
    for (const auto& [k, s] : sets) {
      counts[k] = s.count();
      ok = ok && BigInt(s.count()) == magic.value();
    }
    // Sum of f over (E, R) is |E| - 1.
    bool sums = true;
    for (const auto& [f, _] : sets.at("ER").vectors)
      sums = sums && std::accumulate(f.begin(), f.end(), 0) + 1 == static_cast<int>(t.num_E());
    json offsets = json::object();
    bool translates = true;
    for (const auto& pr : dual_hypergraph_pairs()) {
      const auto c = translate_offset(sets.at(pr[0]), sets.at(pr[1]));
      offsets[pr[0] + "/" + pr[1]] = c ? json(*c) : json(nullptr);
      translates = translates && c.has_value();
    }
    bool realizable = true;
    for (const auto& key : hypergraph_keys()) {
      const Hypergraph h = make_hypergraph(t, key);
      for (const auto& [f, _] : sets.at(key).vectors) realizable = realizable && realize_hypertree(h, f).has_value();
    }
    rep = {{"counts", counts},
           {"ER", hypertree_set_json(sets.at("ER"))},
           {"sum_identity", sums},
           {"offsets", offsets},
           {"translates", translates},
           {"realizable", realizable}};
    return ok && sums && translates && realizable;
  });
  const ConfigurationGraph cg = build_configuration_graph(t, opt.cap, opt.jobs);
  detail::run_stage(suite, "classify", [&](json& rep) {
    const Classification cl = classify_components(t, cg, opt.cap);
    rep = classification_json(t, cg, cl);
    rep["tight_configurations"] = cg.vertices.size();
    rep["total_configurations"] = cg.total_configurations;
    rep["edges"] = cg.num_edges;
    rep["component_count"] = cg.num_components;
    const bool counts = cg.num_components == sets.at("ER").count() && cg.num_components == sets.at("VR").count() &&
                        BigInt(cg.num_components) == magic.value();
    bool euler = true;
    const int target = static_cast<int>(t.num_E()) - static_cast<int>(t.num_V());
    for (const auto& c : cl.components) {
      const auto f = degree_record(t.gv, c.representative_tree, Colour::red);
      for (std::size_t r = 0; r < c.euler.size(); ++r) {
        const int face_vertex = *t.gv.find_vertex(t.g.face(static_cast<int>(r)).id);
        euler = euler && c.euler[r] == 2 * (f.at(face_vertex) - 1) - t.n_r(static_cast<int>(r)) + 1;
      }
      euler = euler && std::accumulate(c.euler.begin(), c.euler.end(), 0) == target;
    }
    rep["euler_formula"] = euler;
    return counts && euler && cl.bijection_ok;
  });
  detail::run_stage(suite, "tree_hugging", [&](json& rep) {
    std::size_t longest = 0;
    bool ok = true;
    for (std::size_t v = 0; v < cg.vertices.size(); ++v) {
      const auto path = valence_concentration_path(t, cg.configuration(v));
      longest = std::max(longest, path.size() - 1);
      for (std::size_t i = 1; i < path.size(); ++i) {
        const auto a = cg.find(path[i - 1]), b = cg.find(path[i]);
        ok = ok && a && b && cg.component[*a] == cg.component[*b];
      }
    }
    rep = {{"starts", cg.vertices.size()}, {"longest_path", longest}, {"paths_in_component", ok}};
    return ok;
  });
  return suite;
}

/// States, clock graph and the state/configuration correspondence, followed
/// by the graph suite on the dual graph.
inline VerificationSuite verify_universe(const Universe& u, const std::string& instance,
                                         const VerifyOptions& opt = {}) {
  VerificationSuite suite{instance, {}};
  detail::run_stage(suite, "clock", [&](json& rep) {
    const ClockGraph cg = clock_graph(u, opt.cap);
    rep = clock_json(u, cg);
    return cg.report.ok();
  });
  detail::run_stage(suite, "correspond", [&](json& rep) {
    const Correspondence c = states_vs_configurations(u, opt.cap);
    rep = correspondence_json(u, c);
    return c.ok();
  });
  VerificationSuite inner = verify_graph(universe_dual_graph(u), instance + "_dual", opt);
  for (auto& s : inner.stages) {
    s.name = "dual_" + s.name;
    suite.stages.push_back(std::move(s));
  }
  return suite;
}

}  // namespace trinkit
