// trinkit command-line tool.
//
// Exit status: 0 pass, 1 a verification identity failed, 2 bad usage or input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "trinkit/corpus.hpp"
#include "trinkit/reports.hpp"

namespace {

using namespace trinkit;

struct Options {
  std::string format = "json";
  long long cap = kDefaultCap;
  unsigned jobs = 1;
  bool timing = false;
  std::string graph;
  std::string universe;
  std::string hypergraph = "all";
  bool all_configs = false;
  bool lattice = false;
  std::string family;
  int size = 0;
  bool fixtures = false;
  std::string out_dir = ".";
};

// Input errors map to exit 2; everything else that throws is a failed identity.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

RotationGraph load_graph(const Options& o) {
  if (o.graph.empty()) throw InputError("--graph FILE is required");
  return parse_graph(read_json(o.graph));
}

Universe load_universe(const Options& o) {
  if (o.universe.empty()) throw InputError("--universe FILE is required");
  return parse_universe(read_json(o.universe));
}

struct Outcome {
  json report;
  bool pass = true;
  std::string summary;
};

Outcome cmd_census(const Options& o) {
  const Census c = trinity_census(build_trinity(load_graph(o)));
  std::ostringstream s;
  s << "V=" << c.V << " E=" << c.E << " R=" << c.R << " n=" << c.n << " identities " << (c.euler_ok() ? "hold" : "FAIL");
  return {census_json(c), c.euler_ok(), s.str()};
}

Outcome cmd_magic(const Options& o) {
  const MagicReport m = magic_number(build_trinity(load_graph(o)), o.cap);
  json rep = magic_json(m);
  rep["value"] = to_decimal(m.value());
  return {rep, m.agree, "magic number " + to_decimal(m.value()) + (m.agree ? ", all counts agree" : ", counts DISAGREE")};
}

Outcome cmd_hypertrees(const Options& o) {
  const Trinity t = build_trinity(load_graph(o));
  if (o.hypergraph != "all") {
    const HypertreeSet s = enumerate_hypertrees(make_hypergraph(t, o.hypergraph), o.cap);
    return {hypertree_set_json(s), true, o.hypergraph + ": " + std::to_string(s.count()) + " hypertrees"};
  }
  json rep = json::array();
  std::string summary;
  for (const auto& [k, s] : enumerate_all_hypertrees(t, o.cap)) {
    rep.push_back(hypertree_set_json(s));
    summary += (summary.empty() ? "" : " ") + k + "=" + std::to_string(s.count());
  }
  return {rep, true, summary};
}

Outcome cmd_configs(const Options& o) {
  const Trinity t = build_trinity(load_graph(o));
  json list = json::array();
  std::size_t tight = 0;
  if (o.all_configs) {
    BigInt total(1);
    for (std::size_t f = 0; f < t.num_R(); ++f) total *= catalan(static_cast<std::size_t>(t.n_r(static_cast<int>(f))));
    if (total > o.cap) throw CapExceeded("configuration count exceeds cap");
    std::vector<std::vector<ChordDiagram>> diagrams;
    for (std::size_t f = 0; f < t.num_R(); ++f)
      diagrams.push_back(enumerate_chord_diagrams(static_cast<std::size_t>(t.n_r(static_cast<int>(f))), o.cap));
    std::vector<std::size_t> idx(diagrams.size(), 0);
    for (;;) {
      Configuration c;
      for (std::size_t f = 0; f < idx.size(); ++f) c.discs.push_back(diagrams[f][idx[f]]);
      json j = configuration_json(t, c);
      tight += j["tight"].get<bool>();
      list.push_back(std::move(j));
      std::size_t f = idx.size();
      while (f > 0 && ++idx[f - 1] == diagrams[f - 1].size()) idx[--f] = 0;
      if (f == 0) break;
    }
  } else {
    const ConfigurationGraph cg = build_configuration_graph(t, o.cap, o.jobs);
    for (std::size_t v = 0; v < cg.vertices.size(); ++v) list.push_back(configuration_json(t, cg.configuration(v)));
    tight = cg.vertices.size();
  }
  json rep = {{"count", list.size()}, {"tight", tight}, {"configurations", list}};
  return {rep, true, std::to_string(tight) + " tight of " + std::to_string(list.size()) + " listed configurations"};
}

Outcome cmd_classify(const Options& o) {
  const Trinity t = build_trinity(load_graph(o));
  const ConfigurationGraph cg = build_configuration_graph(t, o.cap, o.jobs);
  const Classification cl = classify_components(t, cg, o.cap);
  json rep = classification_json(t, cg, cl);
  return {rep, cl.bijection_ok,
          std::to_string(cg.num_components) + " components over " + std::to_string(cg.vertices.size()) +
              " tight configurations; hypertree bijection " + (cl.bijection_ok ? "holds" : "FAILS")};
}

Outcome cmd_verify(const Options& o) {
  if (!o.graph.empty() == !o.universe.empty()) throw InputError("verify needs exactly one of --graph or --universe");
  const VerifyOptions vo{o.cap, o.jobs};
  const VerificationSuite suite = o.graph.empty() ? verify_universe(load_universe(o), o.universe, vo)
                                                  : verify_graph(load_graph(o), o.graph, vo);
  std::ostringstream s;
  for (const auto& st : suite.stages) s << st.name << ":" << (st.pass ? "pass" : "FAIL") << " ";
  for (const auto& st : suite.stages) {
    if (st.name == "magic" || st.name == "dual_magic") s << "magic=" << st.report["value"].get<std::string>() << " ";
    if (st.name == "classify" || st.name == "dual_classify") s << "components=" << st.report["component_count"] << " ";
  }
  s << (suite.pass() ? "PASS" : "FAIL");
  return {suite.to_json(o.timing), suite.pass(), s.str()};
}

Outcome cmd_states(const Options& o) {
  const Universe u = load_universe(o);
  const auto states = enumerate_states(u, o.cap);
  const std::size_t n = u.g.num_vertices();
  if (n > 30 || (1LL << n) > o.cap) throw CapExceeded("splitting enumeration exceeds cap");
  std::size_t single = 0;
  for (long long mask = 0; mask < (1LL << n); ++mask) {
    std::vector<int> sp(n);
    for (std::size_t v = 0; v < n; ++v) sp[v] = static_cast<int>((mask >> v) & 1);
    single += splitting_loops(u, sp) == 1;
  }
  json list = json::array();
  for (const auto& s : states) list.push_back(state_json(u, s));
  const bool ok = single == states.size();
  json rep = {{"count", states.size()}, {"single_loop_splittings", single}, {"states", list}, {"ok", ok}};
  return {rep, ok, std::to_string(states.size()) + " states, " + std::to_string(single) + " single-loop splittings"};
}

Outcome cmd_clock(const Options& o) {
  const Universe u = load_universe(o);
  const ClockGraph cg = clock_graph(u, o.cap, o.lattice);
  return {clock_json(u, cg), cg.report.ok(),
          std::to_string(cg.states.size()) + " states, " + std::to_string(cg.arcs.size()) + " clockwise arcs; structure " +
              (cg.report.ok() ? "ok" : "FAILS")};
}

Outcome cmd_dual(const Options& o) {
  const RotationGraph g = universe_dual_graph(load_universe(o));
  return {graph_to_json(g, true), true,
          std::to_string(g.num_vertices()) + " vertices, " + std::to_string(g.num_edges()) + " edges, " +
              std::to_string(g.num_faces()) + " faces"};
}

Outcome cmd_correspond(const Options& o) {
  const Universe u = load_universe(o);
  const Correspondence c = states_vs_configurations(u, o.cap);
  return {correspondence_json(u, c), c.ok(),
          std::to_string(c.states) + " states, " + std::to_string(c.tight_configurations) + " tight configurations, magic " +
              to_decimal(c.magic) + (c.ok() ? "; bijection holds" : "; bijection FAILS")};
}

void write_file(const std::filesystem::path& p, const json& doc) {
  std::ofstream out(p);
  if (!out) throw InputError("cannot write '" + p.string() + "'");
  out << doc.dump(2) << "\n";
}

Outcome cmd_gen(const Options& o) {
  std::filesystem::create_directories(o.out_dir);
  const std::filesystem::path dir(o.out_dir);
  json written = json::array();
  if (o.fixtures) {
    const std::vector<std::pair<std::string, RotationGraph>> graphs{{"single_edge", single_edge_graph()},
                                                                   {"c4", c4_graph()},
                                                                   {"triangle", triangle_graph()},
                                                                   {"running_example", running_example_graph()}};
    for (const auto& [name, g] : graphs) {
      write_file(dir / (name + ".json"), graph_to_json(g));
      written.push_back(name + ".json");
    }
    for (const auto& [name, u] : corpus_universes()) {
      write_file(dir / (name + ".json"), universe_to_json(u));
      written.push_back(name + ".json");
    }
  } else {
    if (o.family.empty()) throw InputError("gen needs --family F --size N, or --fixtures");
    const RotationGraph g = generate_corpus(o.family, o.size);
    const std::string name = o.family + "_" + std::to_string(o.size) + ".json";
    write_file(dir / name, graph_to_json(g));
    written.push_back(name);
  }
  return {json{{"written", written}}, true, "wrote " + std::to_string(written.size()) + " file(s) to " + o.out_dir};
}

bool is_input_error(const Error& e) {
  return dynamic_cast<const SchemaError*>(&e) || dynamic_cast<const NotConnected*>(&e) ||
         dynamic_cast<const NotPlanarConsistent*>(&e) || dynamic_cast<const NotBipartite*>(&e) ||
         dynamic_cast<const CapExceeded*>(&e) || dynamic_cast<const UnknownRoot*>(&e) ||
         dynamic_cast<const NotFourRegular*>(&e) || dynamic_cast<const StarsNotAdjacent*>(&e) ||
         dynamic_cast<const CountMismatch*>(&e) || dynamic_cast<const UnknownFamily*>(&e) ||
         dynamic_cast<const SizeMismatch*>(&e) || dynamic_cast<const IndexMismatch*>(&e) ||
         dynamic_cast<const WrongClass*>(&e);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Trinities of plane bipartite graphs: magic numbers, hypertrees, tight configurations and states"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "summary"}));
  app.add_option("--cap", o.cap, "Bound on enumerated objects per stage")->check(CLI::PositiveNumber);
  app.add_option("--jobs", o.jobs, "Worker threads for configuration filtering")->check(CLI::Range(1, 64));
  app.add_flag("--timing", o.timing, "Include stage timings in verify reports");

  using Handler = Outcome (*)(const Options&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto graph_cmd = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--graph", o.graph, "Graph JSON file")->required();
    commands.emplace_back(sub, h);
    return sub;
  };
  auto universe_cmd = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--universe", o.universe, "Universe JSON file")->required();
    commands.emplace_back(sub, h);
    return sub;
  };
  graph_cmd("census", "Vertex, face and incidence counts of the trinity", cmd_census);
  graph_cmd("magic", "Arborescence and hypertree counts", cmd_magic);
  graph_cmd("hypertrees", "Hypertree sets", cmd_hypertrees)
      ->add_option("--hypergraph", o.hypergraph, "VE, EV, ER, RE, VR, RV or all");
  graph_cmd("configs", "Tight configurations", cmd_configs)
      ->add_flag("--all", o.all_configs, "List every configuration, tight or not");
  graph_cmd("classify", "Configuration graph components and their hypertrees", cmd_classify);
  {
    CLI::App* sub = app.add_subcommand("verify", "Run every cross-identity");
    sub->add_option("--graph", o.graph, "Graph JSON file");
    sub->add_option("--universe", o.universe, "Universe JSON file");
    commands.emplace_back(sub, cmd_verify);
  }
  universe_cmd("states", "Kauffman states", cmd_states);
  universe_cmd("clock", "Clock graph of clockwise transpositions", cmd_clock)
      ->add_flag("--lattice", o.lattice, "Also check meets and joins (small inputs)");
  universe_cmd("dual", "Checkerboard dual graph", cmd_dual);
  universe_cmd("correspond", "States versus tight configurations of the dual graph", cmd_correspond);
  {
    CLI::App* sub = app.add_subcommand("gen", "Write corpus graphs");
    sub->add_option("--family", o.family, "path, even_cycle, theta, grid or ladder");
    sub->add_option("--size", o.size, "Family parameter");
    sub->add_flag("--fixtures", o.fixtures, "Write the built-in fixtures instead");
    sub->add_option("--out", o.out_dir, "Output directory");
    commands.emplace_back(sub, cmd_gen);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& [sub, handler] : commands) {
      if (!sub->parsed()) continue;
      const Outcome out = handler(o);
      if (o.format == "json") {
        std::cout << out.report.dump(2) << "\n";
        std::cerr << out.summary << "\n";
      } else {
        std::cout << out.summary << "\n";
      }
      return out.pass ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
