#ifndef PPART_GRAPH_HPP
#define PPART_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace ppart {

// Simple undirected graph on vertex ids 0..n-1.  Adjacency is stored as one
// bitset row per vertex (64-bit words), which keeps the subset searches in
// the invariant/oracle modules cheap at the orders this library targets.
// No self-loops, no parallel edges.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n,
                          std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  int edge_count() const { return m_; }

  // add_edge ignores an already-present edge; a self-loop is rejected.
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;

  // Adjacency row of v as a single word; only valid when order() <= 64.
  std::uint64_t neighbor_mask(int v) const;

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const;

private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;  // row-major, words_ per vertex
};

// Subgraph induced on `vertices` (must be strictly increasing valid ids);
// vertex i of the result corresponds to vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

// Relabeled copy: vertex v of g becomes perm[v] (perm a permutation of 0..n-1).
Graph permuted(const Graph& g, std::span<const int> perm);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

bool is_connected(const Graph& g);  // vacuously true for the empty graph

// 2-connected: order >= 3, connected, and no cut vertex.
bool is_biconnected(const Graph& g);

}  // namespace ppart

#endif
