#ifndef PPART_TEST_UTIL_HPP
#define PPART_TEST_UTIL_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "ppart/generators.hpp"
#include "ppart/graph.hpp"

namespace ppart::test {

inline Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// Deterministic pseudo-random permutation of 0..n-1.
inline std::vector<int> random_permutation(int n, SplitMix64& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.next_int(i + 1)]);
  return perm;
}

inline Graph relabeled(const Graph& g, SplitMix64& rng) {
  return permuted(g, random_permutation(g.order(), rng));
}

// Brute force: g is 2-connected iff n >= 3, connected, and removing any
// single vertex keeps it connected.
inline bool brute_biconnected(const Graph& g) {
  const int n = g.order();
  if (n < 3 || !is_connected(g)) return false;
  for (int v = 0; v < n; ++v) {
    std::vector<int> keep;
    for (int u = 0; u < n; ++u)
      if (u != v) keep.push_back(u);
    if (!is_connected(induced_subgraph(g, keep))) return false;
  }
  return true;
}

}  // namespace ppart::test

#endif
