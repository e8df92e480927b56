#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qsrg/gamma.hpp"
#include "qsrg/perm_group.hpp"

namespace qsrg {

// The maps the theory names on G x G:
//   swap          (x, y) -> (y, x)
//   rotate        (x, y) -> (y^-1, y^-1 x), order 3 as a permutation
//   translations  (x, y) -> (xa, yb), on the right so that differences
//                 u v^-1 are untouched
//   lifted        (x, y) -> (f(x), f(y)) for f an automorphism of G fixing H
// swap, the translations and the lifted maps preserve adjacency for every
// pair; rotate is expected to preserve it exactly when H is normal, and its
// observed status is recorded rather than assumed.
struct NamedMaps {
  Perm swap;
  Perm rotate;
  bool rotate_is_automorphism = false;
  std::vector<Perm> translations;  // psi_(a,e) and psi_(e,a) over a generating set
  std::vector<Perm> lifted;
};

Perm swap_map(const FiniteGroup& g);
Perm rotate_map(const FiniteGroup& g);
Perm translation_map(const FiniteGroup& g, int a, int b);
Perm lifted_map(const FiniteGroup& g, const Perm& f);

// Builds all named maps and checks each promised automorphism on the actual
// graph, throwing AutomorphismCheckFailed if one fails.
NamedMaps named_automorphisms(const GammaInstance& inst);

struct PredictedOrders {
  bool applicable = false;  // nontrivial proper H only
  std::uint64_t stabilizer = 0;  // |Aut_H(G)| * (6 when H is normal, else 2)
  std::uint64_t full = 0;        // |G|^2 * stabilizer
};

PredictedOrders predicted_orders(const FiniteGroup& g, const Subgroup& h);

struct SymmetryVerdict {
  bool applicable = false;
  std::uint64_t predicted_stabilizer = 0;
  std::uint64_t predicted_full = 0;
  std::uint64_t generated_order = 0;  // order of the group the named maps generate
  std::optional<std::uint64_t> searched_order;  // independent graph search, when run
  bool orders_match = false;
  bool rotate_is_automorphism = false;
  bool vertex_transitive = false;
  bool edge_transitive_condition = false;  // H normal and Aut_H(G) transitive off H
  bool edge_transitive_orbits = false;
  bool arc_transitive_orbits = false;
  bool transitivity_agreement = false;
  std::optional<bool> elementary_abelian_quotient;  // when H is normal
};

// True exactly when H is normal and the H-fixing automorphisms of G act
// transitively on G minus H.
bool edge_transitivity_condition(const FiniteGroup& g, const Subgroup& h);

struct TransitivityVerdict {
  bool vertex = false;
  bool edge = false;
  bool arc = false;
};

TransitivityVerdict transitivity_by_orbits(const GammaInstance& inst,
                                           const PermGroup& group);

enum class CorollaryVerdict {
  holds,                // edge-transitive and G/H elementary abelian
  not_applicable,       // not edge-transitive
  converse_failure_ok,  // quotient elementary abelian without edge-transitivity
};

// Edge-transitivity forces an elementary abelian quotient; the converse can
// fail.  Throws CorollaryViolated if an edge-transitive instance has a
// non-elementary-abelian quotient, which no correct build should produce.
CorollaryVerdict corollary_elem_abelian_check(const FiniteGroup& g, const Subgroup& h);

struct SymmetryOptions {
  bool run_search = true;    // independent graph automorphism search
  int search_bound = 64;     // max vertex count for the search leg
};

SymmetryVerdict certify_aut_group(const GammaInstance& inst,
                                  const SymmetryOptions& options = {});

}  // namespace qsrg
