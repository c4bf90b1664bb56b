#pragma once

#include <string>
#include <vector>

#include "kazhdan/finite_group.hpp"
#include "kazhdan/rational.hpp"

namespace kazhdan {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite connected graph decorated with finite vertex groups and, per
/// edge, an edge group with two injective maps into the endpoint groups.
/// A loop (source == target) encodes an HNN letter.
struct GraphOfGroups {
  struct Vertex {
    std::string id;
    FiniteGroup group;
    std::string group_name;  // display name from the input file, may be empty
  };
  struct Edge {
    std::string id;
    FiniteGroup group;
    std::string group_name;
    int source = 0;  // vertex index
    int target = 0;
    GroupHom alpha;  // edge group -> source vertex group
    GroupHom beta;   // edge group -> target vertex group
  };
  std::string name;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

/// One G-orbit of simplices of a proper cocompact complex, given by its
/// dimension and a stabilizer inside a named vertex group.
struct OrbitDatum {
  int dim = 0;
  int vertex = 0;
  Subgroup stabilizer;
};

struct OrbitComplex {
  std::vector<OrbitDatum> orbits;
};

enum class Amenability { non_amenable, amenable_or_finite };

/// A GraphOfGroups whose invariants have been checked, together with the
/// canonical orbit data of its Bass-Serre tree (one dim-0 orbit per vertex
/// with the full vertex group, one dim-1 orbit per edge with the alpha-image
/// in the source vertex group). Immutable after construction.
class ValidatedGraph {
public:
  explicit ValidatedGraph(GraphOfGroups g);

  const GraphOfGroups& graph() const { return graph_; }
  const OrbitComplex& bass_serre_orbits() const { return bass_serre_; }

  int vertex_count() const { return static_cast<int>(graph_.vertices.size()); }
  int edge_count() const { return static_cast<int>(graph_.edges.size()); }
  const GraphOfGroups::Vertex& vertex(int v) const { return graph_.vertices[v]; }
  const GraphOfGroups::Edge& edge(int e) const { return graph_.edges[e]; }
  const FiniteGroup& vertex_group(int v) const { return graph_.vertices[v].group; }

  /// alpha-image of the edge group inside the source vertex group.
  Subgroup edge_stabilizer(int e) const;

private:
  GraphOfGroups graph_;
  OrbitComplex bass_serre_;
};

/// chi(G) = sum over vertices 1/|G_v| - sum over edges 1/|G_e|, exact.
Rational euler_characteristic(const ValidatedGraph& g);

/// non_amenable iff chi(G) < 0. For finitely generated virtually free input
/// this is exactly the finite / virtually-cyclic exclusion.
Amenability amenability_gate(const ValidatedGraph& g);

}  // namespace kazhdan
