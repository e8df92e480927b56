#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qsrg/graph.hpp"
#include "qsrg/perm.hpp"

namespace qsrg {

// Permutation group given by generators on 0..degree-1.  An empty generator
// list is the trivial group.
struct PermGroup {
  int degree = 0;
  std::vector<Perm> generators;
};

// Exact order by orbit-stabilizer recursion: pick the lowest moved point,
// compute its orbit with coset representatives, collect the Schreier
// generators of the stabilizer, and recurse.  The result is independent of
// generator order and duplicates.
std::uint64_t group_order(const PermGroup& g);

std::vector<std::vector<int>> orbits_on_vertices(const PermGroup& g);

// Orbits on the edge set (unordered adjacent pairs, each listed as u < v)
// and on the arc set (ordered adjacent pairs).  Orbits are sorted
// internally and ordered by their first item.
std::vector<std::vector<std::pair<int, int>>> orbits_on_edges(const PermGroup& g,
                                                              const Graph& graph);
std::vector<std::vector<std::pair<int, int>>> orbits_on_arcs(const PermGroup& g,
                                                             const Graph& graph);

}  // namespace qsrg
