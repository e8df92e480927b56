#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "qsrg/perm.hpp"

namespace qsrg {

// Simple undirected graph on vertices 0..n-1, adjacency kept as bit rows so
// common-neighbour counts are word operations.
class Graph {
 public:
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int words_per_row() const { return words_; }
  const std::uint64_t* row(int v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }

  void add_edge(int u, int v);  // rejects loops and out-of-range endpoints
  bool adjacent(int u, int v) const;
  int degree(int v) const;
  long long edge_count() const;
  std::vector<int> neighbours(int v) const;

  int common_neighbour_count(int u, int v) const;
  std::vector<int> common_neighbours(int u, int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v, const char* what) const;
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct RegularityResult {
  bool regular = false;
  int degree = -1;       // common degree when regular
  int witness_u = -1;    // two vertices of different degree otherwise
  int witness_v = -1;
};
RegularityResult regularity(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> original_vertex;  // induced index -> original index
};
// Subgraph on `vertices` (deduplicated, kept in sorted order).
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// True when `parts` partitions the vertex set and adjacency holds exactly
// between distinct parts.  Throws NotAPartition when `parts` does not cover
// every vertex exactly once.
bool is_complete_multipartite(const Graph& g, const std::vector<std::vector<int>>& parts);

bool is_automorphism(const Graph& g, const Perm& p);

// Text format: "vertices <n>", then one "u v" line per edge with u < v,
// sorted lexicographically.
void write_edge_list(const Graph& g, std::ostream& out);
Graph read_edge_list(std::istream& in);

}  // namespace qsrg
