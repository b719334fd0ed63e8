#ifndef PPART_INVARIANTS_HPP
#define PPART_INVARIANTS_HPP

#include <optional>
#include <span>
#include <vector>

#include "ppart/ext_int.hpp"
#include "ppart/graph.hpp"

namespace ppart {

// An independent set I together with the quantities the partition theory
// cares about: its weight w(I) = sum of degrees, its minimum degree
// delta(I) (+inf for the empty set), and the two derived predicates
//   large: |I| >= delta(I) + 1      light: w(I) <= n - 1.
struct IndependentSetReport {
  std::vector<int> vertices;  // sorted
  long long weight = 0;
  ExtInt min_degree = ExtInt::infinity();
  bool is_large = false;
  bool is_light = false;
};

// Validates that `set` is independent in g (throws otherwise).
IndependentSetReport independent_set_report(const Graph& g,
                                            std::span<const int> set);

int min_degree(const Graph& g);  // rejects the empty graph

// Minimum degree sum / product over non-adjacent vertex pairs; +inf when
// there is no such pair (complete graphs, n <= 1).
ExtInt sigma2(const Graph& g);
ExtInt pi2(const Graph& g);

struct SigmaStarResult {
  ExtInt value;
  // A minimum-weight large independent set when the value is finite.
  std::optional<IndependentSetReport> witness;
};

// sigma* = min weight of a large independent set (+inf if none exists).
// Exact branch-and-bound; supported up to order 64.
SigmaStarResult sigma_star(const Graph& g);

struct ThresholdResult {
  bool holds = true;
  // When the threshold is violated: a large set of weight < threshold.
  std::optional<IndependentSetReport> counterexample;
};

// Decides sigma*(g) >= threshold without computing sigma* exactly.
ThresholdResult sigma_star_at_least(const Graph& g, long long threshold);

struct AlphaStarResult {
  int value = 0;
  IndependentSetReport witness;  // a maximum-cardinality light set
};

// alpha* = max cardinality of a light independent set (>= 1 for n >= 1).
AlphaStarResult alpha_star(const Graph& g);  // rejects the empty graph

// Plain independence number alpha(g).
int independence_number(const Graph& g);

struct InvariantSummary {
  int n = 0;
  int delta = 0;
  ExtInt sigma2;
  ExtInt pi2;
  SigmaStarResult sigma_star;
  AlphaStarResult alpha_star;
  int alpha = 0;
};

InvariantSummary compute_summary(const Graph& g);  // rejects the empty graph

}  // namespace ppart

#endif
