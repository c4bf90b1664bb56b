#include "kazhdan/graph_of_groups.hpp"

#include <algorithm>
#include <set>

namespace kazhdan {

namespace {

void check_connected(const GraphOfGroups& g) {
  if (g.vertices.empty()) throw ValidationError("graph is empty");
  std::vector<char> seen(g.vertices.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& e : g.edges) {
      for (int w : {e.source == v ? e.target : -1, e.target == v ? e.source : -1}) {
        if (w >= 0 && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  for (size_t v = 0; v < seen.size(); ++v)
    if (!seen[v])
      throw ValidationError("graph is disconnected: vertex '" + g.vertices[v].id +
                            "' is unreachable");
}

void check_edge_map(const GraphOfGroups& g, const GraphOfGroups::Edge& e, bool alpha_side) {
  const GroupHom& h = alpha_side ? e.alpha : e.beta;
  const FiniteGroup& tgt = g.vertices[alpha_side ? e.source : e.target].group;
  const char* side = alpha_side ? "alpha" : "beta";
  if (static_cast<int>(h.image.size()) != e.group.order)
    throw ValidationError("edge '" + e.id + "': " + side + " image has wrong length");
  try {
    if (!check_injective_hom(e.group, tgt, h))
      throw ValidationError("edge '" + e.id + "': edge map not injective (" + side + ")");
  } catch (const GroupError& err) {
    throw ValidationError("edge '" + e.id + "': edge map not a homomorphism (" +
                          std::string(side) + "): " + err.what());
  }
}

}  // namespace

ValidatedGraph::ValidatedGraph(GraphOfGroups g) : graph_(std::move(g)) {
  for (const auto& e : graph_.edges) {
    if (e.source < 0 || e.source >= static_cast<int>(graph_.vertices.size()) ||
        e.target < 0 || e.target >= static_cast<int>(graph_.vertices.size()))
      throw ValidationError("edge '" + e.id + "': endpoint out of range");
    check_edge_map(graph_, e, true);
    check_edge_map(graph_, e, false);
  }
  check_connected(graph_);

  for (int v = 0; v < vertex_count(); ++v) {
    std::vector<int> all(vertex_group(v).order);
    for (int x = 0; x < vertex_group(v).order; ++x) all[x] = x;
    bass_serre_.orbits.push_back(OrbitDatum{0, v, Subgroup{std::move(all)}});
  }
  for (int e = 0; e < edge_count(); ++e)
    bass_serre_.orbits.push_back(OrbitDatum{1, graph_.edges[e].source, edge_stabilizer(e)});
}

Subgroup ValidatedGraph::edge_stabilizer(int e) const {
  const auto& ed = graph_.edges[e];
  std::vector<int> img(ed.alpha.image);
  std::sort(img.begin(), img.end());
  return Subgroup{std::move(img)};
}

Rational euler_characteristic(const ValidatedGraph& g) {
  Rational chi;
  for (int v = 0; v < g.vertex_count(); ++v)
    chi += Rational(1, g.vertex_group(v).order);
  for (int e = 0; e < g.edge_count(); ++e) chi -= Rational(1, g.edge(e).group.order);
  return chi;
}

Amenability amenability_gate(const ValidatedGraph& g) {
  return euler_characteristic(g) < Rational(0) ? Amenability::non_amenable
                                                : Amenability::amenable_or_finite;
}

}  // namespace kazhdan
