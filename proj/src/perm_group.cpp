#include "qsrg/perm_group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qsrg {

namespace {

void check_degrees(const PermGroup& g) {
  for (const Perm& p : g.generators)
    if (p.degree() != g.degree)
      throw std::invalid_argument("DegreeMismatch: generator of degree " +
                                  std::to_string(p.degree()) + " in group of degree " +
                                  std::to_string(g.degree));
}

std::uint64_t order_rec(const std::vector<Perm>& gens, int degree) {
  int base = -1;
  for (int p = 0; p < degree && base < 0; ++p)
    for (const Perm& g : gens)
      if (g(p) != p) {
        base = p;
        break;
      }
  if (base < 0) return 1;  // every generator is the identity

  // Orbit of the base point with a transversal of coset representatives.
  std::vector<int> orbit{base};
  std::map<int, Perm> transversal;
  transversal.emplace(base, Perm(degree));
  for (std::size_t head = 0; head < orbit.size(); ++head)
    for (const Perm& g : gens) {
      const int image = g(orbit[head]);
      if (!transversal.count(image)) {
        transversal.emplace(image, compose(g, transversal.at(orbit[head])));
        orbit.push_back(image);
      }
    }

  // Schreier generators of the stabilizer of the base point.
  std::set<std::vector<int>> seen;
  std::vector<Perm> stab_gens;
  for (int p : orbit)
    for (const Perm& g : gens) {
      Perm s = compose(transversal.at(g(p)).inverse(), compose(g, transversal.at(p)));
      if (!s.is_identity() && seen.insert(s.images()).second) stab_gens.push_back(std::move(s));
    }

  return orbit.size() * order_rec(stab_gens, degree);
}

}  // namespace

std::uint64_t group_order(const PermGroup& g) {
  check_degrees(g);
  return order_rec(g.generators, g.degree);
}

std::vector<std::vector<int>> orbits_on_vertices(const PermGroup& g) {
  check_degrees(g);
  std::vector<char> visited(g.degree, 0);
  std::vector<std::vector<int>> orbits;
  for (int v = 0; v < g.degree; ++v) {
    if (visited[v]) continue;
    std::vector<int> orbit = orbit_of(g.generators, v);
    for (int u : orbit) visited[u] = 1;
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

namespace {

std::vector<std::vector<std::pair<int, int>>> orbits_on_items(
    const PermGroup& g, const std::vector<std::pair<int, int>>& items, bool ordered) {
  std::map<std::pair<int, int>, int> index_of;
  for (std::size_t i = 0; i < items.size(); ++i) index_of[items[i]] = static_cast<int>(i);

  std::vector<char> visited(items.size(), 0);
  std::vector<std::vector<std::pair<int, int>>> orbits;
  for (std::size_t start = 0; start < items.size(); ++start) {
    if (visited[start]) continue;
    std::vector<int> frontier{static_cast<int>(start)};
    visited[start] = 1;
    std::vector<std::pair<int, int>> orbit;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      orbit.push_back(items[frontier[head]]);
      for (const Perm& p : g.generators) {
        std::pair<int, int> image{p(items[frontier[head]].first),
                                  p(items[frontier[head]].second)};
        if (!ordered && image.first > image.second) std::swap(image.first, image.second);
        const auto found = index_of.find(image);
        if (found == index_of.end())
          throw std::invalid_argument("NotAnAutomorphism: generator " +
                                      p.to_cycle_string() + " does not preserve the edge set");
        const int idx = found->second;
        if (!visited[idx]) {
          visited[idx] = 1;
          frontier.push_back(idx);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end());
  return orbits;
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> orbits_on_edges(const PermGroup& g,
                                                              const Graph& graph) {
  check_degrees(g);
  if (g.degree != graph.vertex_count())
    throw std::invalid_argument("DegreeMismatch: group degree " + std::to_string(g.degree) +
                                " vs " + std::to_string(graph.vertex_count()) + " vertices");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < graph.vertex_count(); ++u)
    for (int v = u + 1; v < graph.vertex_count(); ++v)
      if (graph.adjacent(u, v)) edges.emplace_back(u, v);
  return orbits_on_items(g, edges, false);
}

std::vector<std::vector<std::pair<int, int>>> orbits_on_arcs(const PermGroup& g,
                                                             const Graph& graph) {
  check_degrees(g);
  if (g.degree != graph.vertex_count())
    throw std::invalid_argument("DegreeMismatch: group degree " + std::to_string(g.degree) +
                                " vs " + std::to_string(graph.vertex_count()) + " vertices");
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < graph.vertex_count(); ++u)
    for (int v = 0; v < graph.vertex_count(); ++v)
      if (u != v && graph.adjacent(u, v)) arcs.emplace_back(u, v);
  return orbits_on_items(g, arcs, true);
}

}  // namespace qsrg
