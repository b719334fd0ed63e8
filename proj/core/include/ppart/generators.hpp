#ifndef PPART_GENERATORS_HPP
#define PPART_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "ppart/graph.hpp"

namespace ppart {

// SplitMix64 (Steele, Lea, Flood 2014).  Chosen over the standard library
// engines because its output is fixed by these constants alone, so seeds
// mean the same thing on every platform and standard library.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), using the top 53 bits.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi] by rejection-free scaling (fine for small ranges).
  int next_int(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(
                                             hi - lo + 1));
  }

  // Uniform in [0, bound).
  int next_int(int bound) { return next_int(0, bound - 1); }

private:
  std::uint64_t state_;
};

// Sharpness family: d disjoint cliques of orders t_1..t_d plus one hub.
// Validity: every t_i >= d + 1 (which forces d(d+1) + 1 <= n = 1 + sum t_i).
struct SharpnessSpec {
  std::vector<int> t;

  int d() const { return static_cast<int>(t.size()); }
  int order() const;
  void validate() const;  // throws naming the violated constraint
};

// Vertex numbering for both variants: clique i occupies the next t_i ids
// (cliques in spec order, each contiguous), the hub is the last id n-1.
// gen_sharp_gt joins the hub to one vertex per clique (its lowest id);
// gen_sharp_gt_prime joins the hub to every clique vertex.
Graph gen_sharp_gt(const SharpnessSpec& spec);
Graph gen_sharp_gt_prime(const SharpnessSpec& spec);

Graph gen_complete(int n);
Graph gen_path(int n);
Graph gen_cycle(int n);   // n >= 3
Graph gen_complete_bipartite(int a, int b);

// G(n, p): each pair independently an edge when the next SplitMix64 unit
// draw is < p; pairs scanned in lexicographic order.
Graph gen_random(int n, double p, std::uint64_t seed);

}  // namespace ppart

#endif
