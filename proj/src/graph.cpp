#include "qsrg/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qsrg/errors.hpp"

namespace qsrg {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw std::invalid_argument("IndexOutOfRange: negative vertex count");
  rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_vertex(int v, const char* what) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range(std::string("IndexOutOfRange: ") + what + " " +
                            std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
}

void Graph::add_edge(int u, int v) {
  check_vertex(u, "endpoint");
  check_vertex(v, "endpoint");
  if (u == v)
    throw std::invalid_argument("SameVertex: loop at " + std::to_string(u) +
                                " not allowed");
  rows_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u, "endpoint");
  check_vertex(v, "endpoint");
  return (rows_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

int Graph::degree(int v) const {
  check_vertex(v, "vertex");
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
  return d;
}

long long Graph::edge_count() const {
  long long total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<int> Graph::neighbours(int v) const {
  check_vertex(v, "vertex");
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

int Graph::common_neighbour_count(int u, int v) const {
  check_vertex(u, "vertex");
  check_vertex(v, "vertex");
  if (u == v)
    throw std::invalid_argument("SameVertex: common neighbours need two distinct vertices");
  int c = 0;
  const std::uint64_t* ru = row(u);
  const std::uint64_t* rv = row(v);
  for (int w = 0; w < words_; ++w) c += std::popcount(ru[w] & rv[w]);
  return c;
}

std::vector<int> Graph::common_neighbours(int u, int v) const {
  check_vertex(u, "vertex");
  check_vertex(v, "vertex");
  if (u == v)
    throw std::invalid_argument("SameVertex: common neighbours need two distinct vertices");
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (adjacent(u, x) && adjacent(v, x)) out.push_back(x);
  return out;
}

RegularityResult regularity(const Graph& g) {
  RegularityResult r;
  if (g.vertex_count() == 0) {
    r.regular = true;
    r.degree = 0;
    return r;
  }
  r.degree = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != r.degree) {
      r.regular = false;
      r.witness_u = 0;
      r.witness_v = v;
      // Report a witness anchored at a vertex of the first-seen degree.
      for (int u = 0; u < v; ++u)
        if (g.degree(u) == r.degree) {
          r.witness_u = u;
          break;
        }
      r.degree = -1;
      return r;
    }
  r.regular = true;
  return r;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  if (vertices.empty())
    throw std::invalid_argument("EmptySet: induced subgraph needs at least one vertex");
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (int v : vs)
    if (v < 0 || v >= g.vertex_count())
      throw std::out_of_range("IndexOutOfRange: vertex " + std::to_string(v));
  InducedSubgraph result{Graph(static_cast<int>(vs.size())), vs};
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j]))
        result.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
  return result;
}

bool is_complete_multipartite(const Graph& g, const std::vector<std::vector<int>>& parts) {
  std::vector<int> part_of(g.vertex_count(), -1);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int v : parts[p]) {
      if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("NotAPartition: vertex " + std::to_string(v) +
                                    " out of range");
      if (part_of[v] != -1)
        throw std::invalid_argument("NotAPartition: vertex " + std::to_string(v) +
                                    " in two parts");
      part_of[v] = static_cast<int>(p);
    }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (part_of[v] == -1)
      throw std::invalid_argument("NotAPartition: vertex " + std::to_string(v) +
                                  " not covered");
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.adjacent(u, v) != (part_of[u] != part_of[v])) return false;
  return true;
}

bool is_automorphism(const Graph& g, const Perm& p) {
  if (p.degree() != g.vertex_count())
    throw std::invalid_argument("DegreeMismatch: permutation degree " +
                                std::to_string(p.degree()) + " vs " +
                                std::to_string(g.vertex_count()) + " vertices");
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.adjacent(u, v) != g.adjacent(p(u), p(v))) return false;
  return true;
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "vertices " << g.vertex_count() << "\n";
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.adjacent(u, v)) out << u << ' ' << v << "\n";
}

Graph read_edge_list(std::istream& in) {
  std::string keyword;
  int n = 0;
  if (!(in >> keyword >> n) || keyword != "vertices" || n < 0)
    throw parse_error("ParseError: expected \"vertices <n>\" header");
  Graph g(n);
  int u, v;
  while (true) {
    if (!(in >> u)) {
      if (in.eof()) break;
      throw parse_error("ParseError: non-numeric edge entry");
    }
    if (!(in >> v)) throw parse_error("ParseError: dangling edge endpoint");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw parse_error("ParseError: edge endpoint out of range");
    if (u == v) throw parse_error("ParseError: loop in edge list");
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace qsrg
