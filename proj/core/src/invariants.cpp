#include "ppart/invariants.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

namespace ppart {

IndependentSetReport independent_set_report(const Graph& g,
                                            std::span<const int> set) {
  IndependentSetReport r;
  r.vertices.assign(set.begin(), set.end());
  std::sort(r.vertices.begin(), r.vertices.end());
  if (std::adjacent_find(r.vertices.begin(), r.vertices.end()) !=
      r.vertices.end())
    throw std::invalid_argument("duplicate vertex in set");
  for (size_t i = 0; i < r.vertices.size(); ++i)
    for (size_t j = i + 1; j < r.vertices.size(); ++j)
      if (g.adjacent(r.vertices[i], r.vertices[j]))
        throw std::invalid_argument("set is not independent");
  long long min_deg = LLONG_MAX;
  for (int v : r.vertices) {
    int d = g.degree(v);
    r.weight += d;
    min_deg = std::min<long long>(min_deg, d);
  }
  r.min_degree =
      r.vertices.empty() ? ExtInt::infinity() : ExtInt(min_deg);
  r.is_large = !r.vertices.empty() &&
               static_cast<long long>(r.vertices.size()) >= min_deg + 1;
  r.is_light = r.weight <= static_cast<long long>(g.order()) - 1;
  return r;
}

int min_degree(const Graph& g) {
  if (g.order() == 0)
    throw std::invalid_argument("min_degree of the empty graph");
  int d = INT_MAX;
  for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

ExtInt sigma2(const Graph& g) {
  ExtInt best = ExtInt::infinity();
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v))
        best = std::min(best, ExtInt(g.degree(u) + g.degree(v)));
  return best;
}

ExtInt pi2(const Graph& g) {
  ExtInt best = ExtInt::infinity();
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v))
        best = std::min(best, ExtInt(static_cast<long long>(g.degree(u)) *
                                     g.degree(v)));
  return best;
}

namespace {

// Shared state for the exact searches.  Vertices are visited in
// nondecreasing degree order, so the minimum degree of the chosen set is
// the degree of its first member and weight pruning is monotone.
struct SearchContext {
  const Graph& g;
  int n;
  std::vector<int> ord;          // vertex ids, sorted by (degree, id)
  std::vector<std::uint64_t> nbr;  // neighbor masks, by vertex id

  explicit SearchContext(const Graph& g) : g(g), n(g.order()) {
    if (n > 64)
      throw std::invalid_argument(
          "exact independent-set search supports at most 64 vertices");
    ord.resize(n);
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) {
      return g.degree(a) < g.degree(b);
    });
    nbr.resize(n);
    for (int v = 0; v < n; ++v) nbr[v] = g.neighbor_mask(v);
  }
};

// Minimum weight of a large independent set with weight < limit; fills
// best_set when one is found.  Tests largeness at every node.
std::optional<long long> min_large_weight(const Graph& g, long long limit,
                                          std::vector<int>& best_set) {
  SearchContext ctx(g);
  long long best = limit;
  bool found = false;
  std::vector<int> chosen;

  auto dfs = [&](auto&& self, int idx, std::uint64_t forbidden,
                 long long weight, int first_deg) -> void {
    for (int i = idx; i < ctx.n; ++i) {
      int v = ctx.ord[i];
      if ((forbidden >> v) & 1) continue;
      long long w = weight + ctx.g.degree(v);
      if (w >= best) break;  // degrees ahead are no smaller
      int fd = chosen.empty() ? ctx.g.degree(v) : first_deg;
      chosen.push_back(v);
      if (static_cast<long long>(chosen.size()) >= fd + 1) {
        best = w;  // w < best checked above
        best_set = chosen;
        found = true;
      }
      self(self, i + 1, forbidden | ctx.nbr[v], w, fd);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, 0, 0, 0);
  if (!found) return std::nullopt;
  return best;
}

}  // namespace

SigmaStarResult sigma_star(const Graph& g) {
  SigmaStarResult r;
  std::vector<int> best_set;
  auto w = min_large_weight(g, LLONG_MAX, best_set);
  if (!w) {
    r.value = ExtInt::infinity();
    return r;
  }
  r.value = ExtInt(*w);
  r.witness = independent_set_report(g, best_set);
  return r;
}

ThresholdResult sigma_star_at_least(const Graph& g, long long threshold) {
  ThresholdResult r;
  std::vector<int> best_set;
  auto w = min_large_weight(g, threshold, best_set);
  if (w) {
    r.holds = false;
    r.counterexample = independent_set_report(g, best_set);
  }
  return r;
}

AlphaStarResult alpha_star(const Graph& g) {
  if (g.order() == 0)
    throw std::invalid_argument("alpha_star of the empty graph");
  SearchContext ctx(g);
  const long long budget = g.order() - 1;  // light: weight <= n - 1
  int best = 0;
  std::vector<int> best_set, chosen;

  auto dfs = [&](auto&& self, int idx, std::uint64_t forbidden,
                 long long weight) -> void {
    if (static_cast<int>(chosen.size()) > best) {
      best = static_cast<int>(chosen.size());
      best_set = chosen;
    }
    if (static_cast<int>(chosen.size()) + (ctx.n - idx) <= best) return;
    for (int i = idx; i < ctx.n; ++i) {
      int v = ctx.ord[i];
      long long w = weight + ctx.g.degree(v);
      if (w > budget) break;  // later vertices cost at least as much
      if ((forbidden >> v) & 1) continue;
      chosen.push_back(v);
      self(self, i + 1, forbidden | ctx.nbr[v], w);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, 0, 0);

  AlphaStarResult r;
  r.value = best;
  r.witness = independent_set_report(g, best_set);
  return r;
}

int independence_number(const Graph& g) {
  SearchContext ctx(g);
  int best = 0;
  int count = 0;
  auto dfs = [&](auto&& self, int idx, std::uint64_t forbidden) -> void {
    best = std::max(best, count);
    if (count + (ctx.n - idx) <= best) return;
    for (int i = idx; i < ctx.n; ++i) {
      int v = ctx.ord[i];
      if ((forbidden >> v) & 1) continue;
      ++count;
      self(self, i + 1, forbidden | ctx.nbr[v]);
      --count;
    }
  };
  dfs(dfs, 0, 0);
  return best;
}

InvariantSummary compute_summary(const Graph& g) {
  if (g.order() == 0)
    throw std::invalid_argument("invariant summary of the empty graph");
  InvariantSummary s;
  s.n = g.order();
  s.delta = min_degree(g);
  s.sigma2 = sigma2(g);
  s.pi2 = pi2(g);
  s.sigma_star = sigma_star(g);
  s.alpha_star = alpha_star(g);
  s.alpha = independence_number(g);
  return s;
}

}  // namespace ppart
