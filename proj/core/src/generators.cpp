#include "ppart/generators.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace ppart {

int SharpnessSpec::order() const {
  return 1 + std::accumulate(t.begin(), t.end(), 0);
}

void SharpnessSpec::validate() const {
  if (t.empty()) throw std::invalid_argument("sharpness spec: no cliques");
  const int k = d();
  for (int ti : t)
    if (ti < k + 1)
      throw std::invalid_argument(
          "sharpness spec: clique order " + std::to_string(ti) +
          " violates t_i >= d+1 = " + std::to_string(k + 1));
  // min t_i >= d+1 already forces d(d+1)+1 <= n = 1 + sum t_i.
}

namespace {

Graph sharp_base(const SharpnessSpec& spec, bool hub_to_all) {
  spec.validate();
  const int n = spec.order();
  const int hub = n - 1;
  Graph g(n);
  int lo = 0;
  for (int ti : spec.t) {
    for (int u = lo; u < lo + ti; ++u)
      for (int v = u + 1; v < lo + ti; ++v) g.add_edge(u, v);
    if (hub_to_all)
      for (int u = lo; u < lo + ti; ++u) g.add_edge(hub, u);
    else
      g.add_edge(hub, lo);  // the clique's lowest id is its attachment
    lo += ti;
  }
  return g;
}

}  // namespace

Graph gen_sharp_gt(const SharpnessSpec& spec) { return sharp_base(spec, false); }

Graph gen_sharp_gt_prime(const SharpnessSpec& spec) {
  return sharp_base(spec, true);
}

Graph gen_complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph gen_path(int n) {
  Graph g(n);
  for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g = gen_path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph gen_complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("bad bipartition sizes");
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Graph gen_random(int n, double p, std::uint64_t seed) {
  if (n < 0 || p < 0.0 || p > 1.0)
    throw std::invalid_argument("gen_random wants n >= 0, p in [0,1]");
  SplitMix64 rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_unit() < p) g.add_edge(u, v);
  return g;
}

}  // namespace ppart
