#pragma once

#include <vector>

#include "qsrg/graph.hpp"
#include "qsrg/group.hpp"

namespace qsrg {

// The graph under study lives on G x G.  The pair (x, y) gets vertex index
// x*|G| + y, and two vertices are adjacent when their difference lies in the
// connection set
//
//   S = { (g, e), (e, g), (g, g) : g in G outside H }.
//
// The three branches of S are kept separately (S1, S2, S3), each further
// blocked by the nontrivial right cosets of H.  H1, H2, H3 are the
// corresponding sets with g ranging over H minus the identity instead, and
// Ci = Si union Hi.
struct ConnectionFamily {
  std::vector<int> S;
  std::vector<int> S1, S2, S3;
  std::vector<std::vector<int>> S1_blocks, S2_blocks, S3_blocks;
  std::vector<int> H1, H2, H3;
  std::vector<int> C1, C2, C3;
};

ConnectionFamily connection_set(const FiniteGroup& g, const Subgroup& h);

int gamma_vertex(const FiniteGroup& g, int x, int y);
std::pair<int, int> gamma_coordinates(const FiniteGroup& g, int vertex);

// Cayley graph of `group` with the given connection elements; requires the
// set to exclude the identity and be closed under inverses.
Graph build_cayley(const FiniteGroup& group, const std::vector<int>& connection);

struct GammaInstance {
  FiniteGroup group;
  Subgroup subgroup;
  ConnectionFamily family;
  Graph graph;
};

// Builds the graph for (G, H).  Groups of order below 5 are outside the
// certified range and are rejected unless `allow_small`; H = G yields the
// null graph on |G|^2 vertices.
GammaInstance build_gamma(const FiniteGroup& g, const Subgroup& h,
                          bool allow_small = false);

enum class NeighbourType { type1, type2, type3, not_neighbour };

// Classifies `vertex` relative to (e, e): (g, e) with g outside H is type 1,
// (e, g) type 2, (g, g) type 3.
NeighbourType neighbour_type(const GammaInstance& inst, int vertex);

}  // namespace qsrg
