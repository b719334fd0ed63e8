#ifndef PPART_ORACLE_HPP
#define PPART_ORACLE_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ppart/ext_int.hpp"
#include "ppart/graph.hpp"
#include "ppart/partitioner.hpp"

namespace ppart {

// Brute-force reference implementations.  These recompute everything by
// plain enumeration so the fast paths have something independent to be
// checked against; they are deliberately simple and bounded.
struct OracleBudget {
  int max_n_partition = 12;   // enumerate_biconnected_subsets, oracle_min_2pp
  int max_n_invariants = 16;  // oracle_sigma_star, oracle_alpha_star
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every independent set of g (the empty set included), by plain recursion.
void enumerate_independent_sets(
    const Graph& g, const std::function<void(const std::vector<int>&)>& fn);

// All vertex subsets inducing a 2-connected subgraph, as sorted lists in
// lexicographic order; with include_k2 also the two-vertex edge subsets.
std::vector<std::vector<int>> enumerate_biconnected_subsets(
    const Graph& g, bool include_k2 = false, const OracleBudget& budget = {});

// Exact minimum number of parts over all 2-proper partitions (almost
// variant when allow_k2_first), with one witness partition; nullopt when no
// such partition exists.
std::optional<std::pair<int, Partition>> oracle_min_2pp(
    const Graph& g, bool allow_k2_first = false,
    const OracleBudget& budget = {});

ExtInt oracle_sigma_star(const Graph& g, const OracleBudget& budget = {});
int oracle_alpha_star(const Graph& g, const OracleBudget& budget = {});

}  // namespace ppart

#endif
