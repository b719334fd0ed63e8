#include "ppart/oracle.hpp"

#include <algorithm>
#include <bit>
#include <climits>

#include "ppart/invariants.hpp"

namespace ppart {

namespace {

void check_budget(const Graph& g, int max_n, const char* what) {
  // 30 is a hard ceiling regardless of the configured budget: the subset
  // enumerations below walk all 2^n masks.
  if (g.order() > max_n || g.order() > 30)
    throw BudgetExceeded(std::string(what) + ": order " +
                         std::to_string(g.order()) + " exceeds budget " +
                         std::to_string(std::min(max_n, 30)));
}

}  // namespace

void enumerate_independent_sets(
    const Graph& g, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> current;
  auto rec = [&](auto&& self, int next) -> void {
    fn(current);
    for (int v = next; v < g.order(); ++v) {
      bool ok = true;
      for (int u : current)
        if (g.adjacent(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
}

std::vector<std::vector<int>> enumerate_biconnected_subsets(
    const Graph& g, bool include_k2, const OracleBudget& budget) {
  check_budget(g, budget.max_n_partition, "enumerate_biconnected_subsets");
  const int n = g.order();
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    int size = std::popcount(mask);
    if (size < 2 || (size == 2 && !include_k2)) continue;
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) verts.push_back(v);
    if (size == 2) {
      if (g.adjacent(verts[0], verts[1])) out.push_back(std::move(verts));
      continue;
    }
    if (is_biconnected(induced_subgraph(g, verts)))
      out.push_back(std::move(verts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<int, Partition>> oracle_min_2pp(
    const Graph& g, bool allow_k2_first, const OracleBudget& budget) {
  check_budget(g, budget.max_n_partition, "oracle_min_2pp");
  const int n = g.order();
  if (n == 0) {
    Partition empty;
    empty.kind = allow_k2_first ? PartitionKind::AlmostTwoProper
                                : PartitionKind::TwoProper;
    return std::pair(0, empty);
  }

  // Candidate parts bucketed by their minimum vertex: when covering the
  // lowest uncovered vertex v, only subsets whose minimum is v can be used,
  // so each partition is generated exactly once.
  auto subsets = enumerate_biconnected_subsets(g, allow_k2_first, budget);
  std::vector<std::vector<std::pair<std::uint64_t, const std::vector<int>*>>>
      by_min(n);
  for (const auto& s : subsets) {
    std::uint64_t mask = 0;
    for (int v : s) mask |= 1ULL << v;
    by_min[s.front()].emplace_back(mask, &s);
  }

  const std::uint64_t full = (n == 64) ? ~0ULL : (1ULL << n) - 1;
  int best = INT_MAX;
  std::vector<const std::vector<int>*> chosen, best_parts;

  auto rec = [&](auto&& self, std::uint64_t covered, int used,
                 bool k2_used) -> void {
    if (covered == full) {
      if (used < best) {
        best = used;
        best_parts = chosen;
      }
      return;
    }
    if (used + 1 >= best) return;  // at least one more part needed
    int v = std::countr_zero(~covered);
    for (const auto& [mask, verts] : by_min[v]) {
      if (mask & covered) continue;
      bool is_k2 = verts->size() == 2;
      if (is_k2 && k2_used) continue;
      chosen.push_back(verts);
      self(self, covered | mask, used + 1, k2_used || is_k2);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0, false);

  if (best == INT_MAX) return std::nullopt;
  Partition p;
  p.kind = allow_k2_first ? PartitionKind::AlmostTwoProper
                          : PartitionKind::TwoProper;
  for (const auto* part : best_parts) p.parts.push_back(*part);
  p = normalized(g, std::move(p));
  return std::pair(best, p);
}

ExtInt oracle_sigma_star(const Graph& g, const OracleBudget& budget) {
  check_budget(g, budget.max_n_invariants, "oracle_sigma_star");
  ExtInt best = ExtInt::infinity();
  enumerate_independent_sets(g, [&](const std::vector<int>& set) {
    if (set.empty()) return;
    auto r = independent_set_report(g, set);
    if (r.is_large) best = std::min(best, ExtInt(r.weight));
  });
  return best;
}

int oracle_alpha_star(const Graph& g, const OracleBudget& budget) {
  check_budget(g, budget.max_n_invariants, "oracle_alpha_star");
  if (g.order() == 0)
    throw std::invalid_argument("oracle_alpha_star of the empty graph");
  int best = 0;
  enumerate_independent_sets(g, [&](const std::vector<int>& set) {
    auto r = independent_set_report(g, set);
    if (r.is_light) best = std::max(best, static_cast<int>(set.size()));
  });
  return best;
}

}  // namespace ppart
