#include "qsrg/gamma.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsrg/errors.hpp"

namespace qsrg {

namespace {

void check_pairing(const FiniteGroup& g, const Subgroup& h) {
  if (h.parent_order() != g.order())
    throw std::invalid_argument("GroupMismatch: subgroup belongs to a different group");
}

}  // namespace

int gamma_vertex(const FiniteGroup& g, int x, int y) {
  if (x < 0 || x >= g.order() || y < 0 || y >= g.order())
    throw std::out_of_range("IndexOutOfRange: pair (" + std::to_string(x) + "," +
                            std::to_string(y) + ")");
  return x * g.order() + y;
}

std::pair<int, int> gamma_coordinates(const FiniteGroup& g, int vertex) {
  if (vertex < 0 || vertex >= g.order() * g.order())
    throw std::out_of_range("IndexOutOfRange: vertex " + std::to_string(vertex));
  return {vertex / g.order(), vertex % g.order()};
}

ConnectionFamily connection_set(const FiniteGroup& g, const Subgroup& h) {
  check_pairing(g, h);
  const int e = g.identity();
  ConnectionFamily fam;

  for (int x = 0; x < g.order(); ++x) {
    if (h.contains(x)) {
      if (x != e) {
        fam.H1.push_back(gamma_vertex(g, x, e));
        fam.H2.push_back(gamma_vertex(g, e, x));
        fam.H3.push_back(gamma_vertex(g, x, x));
      }
    } else {
      fam.S1.push_back(gamma_vertex(g, x, e));
      fam.S2.push_back(gamma_vertex(g, e, x));
      fam.S3.push_back(gamma_vertex(g, x, x));
    }
  }

  // Block each Si by the nontrivial right cosets of H, ordered by minimal
  // coset element.
  std::vector<char> seen(g.order(), 0);
  for (int m : h.members()) seen[m] = 1;
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<int> coset;
    for (int m : h.members()) coset.push_back(g.mul(m, x));
    std::sort(coset.begin(), coset.end());
    for (int y : coset) seen[y] = 1;
    std::vector<int> b1, b2, b3;
    for (int y : coset) {
      b1.push_back(gamma_vertex(g, y, e));
      b2.push_back(gamma_vertex(g, e, y));
      b3.push_back(gamma_vertex(g, y, y));
    }
    fam.S1_blocks.push_back(std::move(b1));
    fam.S2_blocks.push_back(std::move(b2));
    fam.S3_blocks.push_back(std::move(b3));
  }

  auto merge_sorted = [](std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
  };
  fam.C1 = merge_sorted(fam.S1, fam.H1);
  fam.C2 = merge_sorted(fam.S2, fam.H2);
  fam.C3 = merge_sorted(fam.S3, fam.H3);

  fam.S = merge_sorted(merge_sorted(fam.S1, fam.S2), fam.S3);
  std::sort(fam.S1.begin(), fam.S1.end());
  std::sort(fam.S2.begin(), fam.S2.end());
  std::sort(fam.S3.begin(), fam.S3.end());

  // Shape checks that the construction promises.
  const int expected = g.order() - h.order();
  if (static_cast<int>(fam.S1.size()) != expected ||
      static_cast<int>(fam.S2.size()) != expected ||
      static_cast<int>(fam.S3.size()) != expected ||
      static_cast<int>(fam.S.size()) != 3 * expected)
    throw std::logic_error("ConnectionSetBroken: branch sizes disagree with |G| - |H|");
  for (const auto* blocks : {&fam.S1_blocks, &fam.S2_blocks, &fam.S3_blocks})
    for (const auto& block : *blocks)
      if (static_cast<int>(block.size()) != h.order())
        throw std::logic_error("ConnectionSetBroken: coset block size differs from |H|");
  return fam;
}

Graph build_cayley(const FiniteGroup& group, const std::vector<int>& connection) {
  const int n = group.order();
  std::vector<char> in_set(n, 0);
  for (int s : connection) {
    if (s < 0 || s >= n)
      throw std::out_of_range("IndexOutOfRange: connection element " + std::to_string(s));
    in_set[s] = 1;
  }
  if (in_set[group.identity()])
    throw std::invalid_argument("ContainsIdentity: connection set must exclude the identity");
  for (int s = 0; s < n; ++s)
    if (in_set[s] && !in_set[group.inv(s)])
      throw std::invalid_argument("NotInverseSymmetric: " + std::to_string(s) +
                                  " present without its inverse " +
                                  std::to_string(group.inv(s)));
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (in_set[group.mul(u, group.inv(v))]) g.add_edge(u, v);
  return g;
}

GammaInstance build_gamma(const FiniteGroup& g, const Subgroup& h, bool allow_small) {
  check_pairing(g, h);
  if (g.order() < 5 && !allow_small)
    throw bound_error("OrderTooSmall: |G| = " + std::to_string(g.order()) +
                      " is below the certified range (pass allow_small to explore)");
  FiniteGroup square = direct_product(g, g);
  ConnectionFamily fam = connection_set(g, h);
  Graph graph = build_cayley(square, fam.S);

  // The degree promised by the construction.
  const int expected_degree = 3 * (g.order() - h.order());
  for (int v = 0; v < graph.vertex_count(); ++v)
    if (graph.degree(v) != expected_degree)
      throw std::logic_error("ConnectionSetBroken: vertex " + std::to_string(v) +
                             " has degree " + std::to_string(graph.degree(v)) +
                             ", expected " + std::to_string(expected_degree));
  return GammaInstance{g, h, std::move(fam), std::move(graph)};
}

NeighbourType neighbour_type(const GammaInstance& inst, int vertex) {
  const auto [x, y] = gamma_coordinates(inst.group, vertex);
  const int e = inst.group.identity();
  const bool x_out = !inst.subgroup.contains(x);
  const bool y_out = !inst.subgroup.contains(y);
  if (y == e && x_out) return NeighbourType::type1;
  if (x == e && y_out) return NeighbourType::type2;
  if (x == y && x_out) return NeighbourType::type3;
  return NeighbourType::not_neighbour;
}

}  // namespace qsrg
