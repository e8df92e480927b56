#pragma once

#include "qsrg/graph.hpp"
#include "qsrg/perm_group.hpp"

namespace qsrg {

// Generators of the full automorphism group of `g`.
//
// Backtracking over an individualization-refinement tree: each node carries
// an ordered partition; refinement splits cells by neighbour counts against
// every cell until equitable; branching individualizes the vertices of one
// non-singleton target cell.  The first root-to-leaf path fixes the target
// cell positions and the expected partition shapes; other branches are
// pruned on shape mismatch and, at first-path nodes, by orbits of the
// generators found so far.  Each discrete leaf proposes the positional map
// from the first leaf, kept only if it fixes the branch prefix and passes a
// full adjacency check, and a branch stops at its first success (one coset
// representative per branch generates the group).
//
// Throws SizeBoundExceeded above `size_bound` vertices.
PermGroup automorphism_search(const Graph& g, int size_bound = 100);

}  // namespace qsrg
