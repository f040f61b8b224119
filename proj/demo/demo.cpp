// Builds the trinity of a 2 x 2 grid, prints its magic number computed three
// ways and the tight configurations grouped by hypertree.

#include <iostream>

#include "trinkit/corpus.hpp"
#include "trinkit/reports.hpp"

int main() {
  using namespace trinkit;
  const Trinity t = build_trinity(generate_corpus("grid", 2));
  const MagicReport m = magic_number(t);
  std::cout << "arborescences: " << m.det[0] << " " << m.det[1] << " " << m.det[2] << "\n";
  std::cout << "hypertrees of (E,R): " << *m.hypertrees.at("ER") << "\n";

  const ConfigurationGraph cg = build_configuration_graph(t);
  const Classification cl = classify_components(t, cg);
  std::cout << cg.vertices.size() << " tight configurations in " << cg.num_components << " components\n";
  for (const auto& c : cl.components) {
    std::cout << "  component " << c.id << " (" << c.size << "): f =";
    for (int f : c.hypertree) std::cout << " " << f;
    std::cout << ", euler =";
    for (int e : c.euler) std::cout << " " << e;
    std::cout << "\n";
  }
  return cl.bijection_ok && m.agree ? 0 : 1;
}
