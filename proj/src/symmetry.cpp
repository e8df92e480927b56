#include "qsrg/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsrg/aut_search.hpp"
#include "qsrg/errors.hpp"

namespace qsrg {

Perm swap_map(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> img(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) img[x * n + y] = y * n + x;
  return Perm::from_images(std::move(img));
}

Perm rotate_map(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> img(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) img[x * n + y] = g.inv(y) * n + g.mul(g.inv(y), x);
  return Perm::from_images(std::move(img));
}

Perm translation_map(const FiniteGroup& g, int a, int b) {
  const int n = g.order();
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw std::out_of_range("IndexOutOfRange: translation by (" + std::to_string(a) +
                            "," + std::to_string(b) + ")");
  std::vector<int> img(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) img[x * n + y] = g.mul(x, a) * n + g.mul(y, b);
  return Perm::from_images(std::move(img));
}

Perm lifted_map(const FiniteGroup& g, const Perm& f) {
  const int n = g.order();
  if (f.degree() != n)
    throw std::invalid_argument("DegreeMismatch: lift of a map on " +
                                std::to_string(f.degree()) + " points to a group of order " +
                                std::to_string(n));
  std::vector<int> img(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) img[x * n + y] = f(x) * n + f(y);
  return Perm::from_images(std::move(img));
}

NamedMaps named_automorphisms(const GammaInstance& inst) {
  const FiniteGroup& g = inst.group;
  NamedMaps maps{swap_map(g), rotate_map(g), false, {}, {}};

  if (!is_automorphism(inst.graph, maps.swap))
    throw std::logic_error("AutomorphismCheckFailed: swap does not preserve adjacency");

  maps.rotate_is_automorphism = is_automorphism(inst.graph, maps.rotate);
  if (is_normal(g, inst.subgroup) && !maps.rotate_is_automorphism)
    throw std::logic_error(
        "AutomorphismCheckFailed: rotate fails although the subgroup is normal");

  for (int a : minimal_generating_set(g)) {
    maps.translations.push_back(translation_map(g, a, g.identity()));
    maps.translations.push_back(translation_map(g, g.identity(), a));
  }
  for (const Perm& t : maps.translations)
    if (!is_automorphism(inst.graph, t))
      throw std::logic_error("AutomorphismCheckFailed: a translation does not preserve adjacency");

  for (const GroupAut& f : aut_stabilizing_subgroup(g, inst.subgroup)) {
    Perm lift = lifted_map(g, f.mapping);
    if (!is_automorphism(inst.graph, lift))
      throw std::logic_error("AutomorphismCheckFailed: lift of " +
                             f.mapping.to_cycle_string() + " does not preserve adjacency");
    maps.lifted.push_back(std::move(lift));
  }
  return maps;
}

PredictedOrders predicted_orders(const FiniteGroup& g, const Subgroup& h) {
  PredictedOrders p;
  if (h.order() == 1 || h.order() == g.order()) return p;
  p.applicable = true;
  const std::uint64_t fixing = aut_stabilizing_subgroup(g, h).size();
  p.stabilizer = fixing * (is_normal(g, h) ? 6 : 2);
  p.full = static_cast<std::uint64_t>(g.order()) * g.order() * p.stabilizer;
  return p;
}

bool edge_transitivity_condition(const FiniteGroup& g, const Subgroup& h) {
  if (!is_normal(g, h)) return false;
  int seed = -1;
  for (int x = 0; x < g.order(); ++x)
    if (!h.contains(x)) {
      seed = x;
      break;
    }
  if (seed < 0) return true;  // H = G, vacuous
  std::vector<Perm> maps;
  for (const GroupAut& f : aut_stabilizing_subgroup(g, h)) maps.push_back(f.mapping);
  const std::vector<int> orbit = orbit_of(maps, seed);
  std::size_t outside = 0;
  for (int x = 0; x < g.order(); ++x)
    if (!h.contains(x)) ++outside;
  return orbit.size() == outside;
}

TransitivityVerdict transitivity_by_orbits(const GammaInstance& inst,
                                           const PermGroup& group) {
  TransitivityVerdict t;
  t.vertex = orbits_on_vertices(group).size() <= 1;
  t.edge = orbits_on_edges(group, inst.graph).size() <= 1;
  t.arc = orbits_on_arcs(group, inst.graph).size() <= 1;
  return t;
}

CorollaryVerdict corollary_elem_abelian_check(const FiniteGroup& g, const Subgroup& h) {
  const bool transitive = edge_transitivity_condition(g, h);
  if (!transitive) {
    if (is_normal(g, h) && is_elementary_abelian(quotient(g, h)))
      return CorollaryVerdict::converse_failure_ok;
    return CorollaryVerdict::not_applicable;
  }
  if (!is_elementary_abelian(quotient(g, h)))
    throw corollary_violation(
        "CorollaryViolated: edge-transitive instance with a quotient that is not "
        "elementary abelian");
  return CorollaryVerdict::holds;
}

SymmetryVerdict certify_aut_group(const GammaInstance& inst,
                                  const SymmetryOptions& options) {
  const FiniteGroup& g = inst.group;
  const Subgroup& h = inst.subgroup;
  SymmetryVerdict v;

  NamedMaps maps = named_automorphisms(inst);
  v.rotate_is_automorphism = maps.rotate_is_automorphism;

  PermGroup generated;
  generated.degree = inst.graph.vertex_count();
  generated.generators = maps.translations;
  generated.generators.push_back(maps.swap);
  if (maps.rotate_is_automorphism) generated.generators.push_back(maps.rotate);
  for (const Perm& lift : maps.lifted) generated.generators.push_back(lift);
  v.generated_order = group_order(generated);

  const PredictedOrders po = predicted_orders(g, h);
  v.applicable = po.applicable;
  v.predicted_stabilizer = po.stabilizer;
  v.predicted_full = po.full;

  PermGroup searched;
  bool have_search = false;
  if (options.run_search && inst.graph.vertex_count() <= options.search_bound) {
    searched = automorphism_search(inst.graph, options.search_bound);
    v.searched_order = group_order(searched);
    have_search = true;
  }

  v.orders_match = true;
  if (v.applicable) {
    v.orders_match = v.generated_order == v.predicted_full;
    if (have_search) v.orders_match = v.orders_match && *v.searched_order == v.predicted_full;
  } else if (have_search) {
    // No predicted order; the named maps still must sit inside the searched group.
    v.orders_match = v.generated_order <= *v.searched_order;
  }

  const TransitivityVerdict t =
      transitivity_by_orbits(inst, have_search ? searched : generated);
  v.vertex_transitive = t.vertex;
  v.edge_transitive_orbits = t.edge;
  v.arc_transitive_orbits = t.arc;
  v.edge_transitive_condition = edge_transitivity_condition(g, h);
  v.transitivity_agreement = v.edge_transitive_condition == v.edge_transitive_orbits &&
                             v.edge_transitive_orbits == v.arc_transitive_orbits;
  if (is_normal(g, h))
    v.elementary_abelian_quotient = is_elementary_abelian(quotient(g, h));
  return v;
}

}  // namespace qsrg
