#include "ppart/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace ppart {

namespace {

// Sorted multiset of neighbor degrees, one per vertex.
std::vector<std::vector<int>> neighbor_degrees(const Graph& g) {
  std::vector<std::vector<int>> out(g.order());
  for (int v = 0; v < g.order(); ++v) {
    for (int u : g.neighbors(v)) out[v].push_back(g.degree(u));
    std::sort(out[v].begin(), out[v].end());
  }
  return out;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a,
                                                 const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (n == 0) return std::vector<int>{};

  std::vector<int> deg_a(n), deg_b(n);
  for (int v = 0; v < n; ++v) {
    deg_a[v] = a.degree(v);
    deg_b[v] = b.degree(v);
  }
  {
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  auto nd_a = neighbor_degrees(a), nd_b = neighbor_degrees(b);

  // Map vertices of a in order of ascending candidate count.
  std::vector<int> order(n);
  {
    std::vector<int> cand_count(n, 0);
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (deg_a[v] == deg_b[w] && nd_a[v] == nd_b[w]) ++cand_count[v];
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return cand_count[x] < cand_count[y];
    });
  }

  std::vector<int> map_ab(n, -1), map_ba(n, -1);
  auto rec = [&](auto&& self, int idx) -> bool {
    if (idx == n) return true;
    int v = order[idx];
    for (int w = 0; w < n; ++w) {
      if (map_ba[w] != -1 || deg_a[v] != deg_b[w] || nd_a[v] != nd_b[w])
        continue;
      bool ok = true;
      for (int u = 0; u < n && ok; ++u)
        if (map_ab[u] != -1 && a.adjacent(v, u) != b.adjacent(w, map_ab[u]))
          ok = false;
      if (!ok) continue;
      map_ab[v] = w;
      map_ba[w] = v;
      if (self(self, idx + 1)) return true;
      map_ab[v] = -1;
      map_ba[w] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return map_ab;
}

bool isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace ppart
