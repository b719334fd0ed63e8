#include "ppart/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "ppart/block_tree.hpp"

namespace ppart {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int n,
                        std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(),
                                                            edges.size()));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop rejected");
  if (adjacent(u, v)) return;
  bits_[static_cast<size_t>(u) * words_ + v / 64] |= 1ULL << (v % 64);
  bits_[static_cast<size_t>(v) * words_ + u / 64] |= 1ULL << (u % 64);
  ++m_;
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < words_; ++w)
    d += std::popcount(bits_[static_cast<size_t>(v) * words_ + w]);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t word = bits_[static_cast<size_t>(v) * words_ + w];
    while (word) {
      int bit = std::countr_zero(word);
      out.push_back(w * 64 + bit);
      word &= word - 1;
    }
  }
  return out;
}

std::uint64_t Graph::neighbor_mask(int v) const {
  check_vertex(v);
  if (n_ > 64)
    throw std::logic_error("neighbor_mask requires order() <= 64");
  return bits_[static_cast<size_t>(v) * words_];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && bits_ == other.bits_;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  for (int i = 0; i + 1 < k; ++i)
    if (vertices[i] >= vertices[i + 1])
      throw std::invalid_argument("induced_subgraph wants increasing ids");
  Graph h(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(vertices[i], vertices[j])) h.add_edge(i, j);
  return h;
}

Graph permuted(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
  Graph h(n);
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

std::vector<std::vector<int>> components(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_biconnected(const Graph& g) {
  if (g.order() < 3) return false;
  auto decomp = block_decomposition(g);
  return decomp.block_count() == 1;
}

}  // namespace ppart
