#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "ppart/generators.hpp"
#include "ppart/invariants.hpp"
#include "ppart/oracle.hpp"
#include "ppart/partitioner.hpp"
#include "test_util.hpp"

using namespace ppart;

TEST_CASE("named graphs") {
  CHECK(gen_complete(5).edge_count() == 10);
  CHECK(sigma2(gen_complete(5)).is_infinite());
  CHECK(gen_path(1).edge_count() == 0);
  CHECK(gen_path(4).edge_count() == 3);
  CHECK(gen_cycle(3).edge_count() == 3);
  CHECK_THROWS_AS(gen_cycle(2), std::invalid_argument);
  Graph b = gen_complete_bipartite(3, 3);
  CHECK(b.edge_count() == 9);
  CHECK(alpha_star(b).value == 1);
  CHECK(gen_complete(0).order() == 0);
}

TEST_CASE("random graphs are deterministic in the seed") {
  Graph a = gen_random(10, 0.5, 1);
  Graph b = gen_random(10, 0.5, 1);
  CHECK(a == b);
  Graph c = gen_random(10, 0.5, 2);
  CHECK_FALSE(a == c);  // astronomically unlikely to collide
  CHECK(gen_random(10, 0.0, 3).edge_count() == 0);
  CHECK(gen_random(10, 1.0, 3).edge_count() == 45);
}

TEST_CASE("splitmix stream matches the reference constants") {
  // reference values for seed 1234567 from the published algorithm
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
  SplitMix64 zero(0);
  CHECK(zero.next() == 16294208416658607535ULL);
}

TEST_CASE("sharpness validation") {
  CHECK_THROWS_AS(gen_sharp_gt(SharpnessSpec{{}}), std::invalid_argument);
  CHECK_THROWS_AS(gen_sharp_gt(SharpnessSpec{{2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(gen_sharp_gt(SharpnessSpec{{3, 3, 3}}), std::invalid_argument);
  CHECK_NOTHROW(gen_sharp_gt(SharpnessSpec{{3, 3}}));
  CHECK_NOTHROW(gen_sharp_gt(SharpnessSpec{{4, 4, 4}}));
  SharpnessSpec s{{3, 4}};
  CHECK(s.d() == 2);
  CHECK(s.order() == 8);
}

TEST_CASE("sharp gt structure and frozen invariants") {
  SharpnessSpec spec{{3, 4}};
  Graph g = gen_sharp_gt(spec);
  CHECK(g.order() == 8);
  // hub is the last id, degree d
  CHECK(g.degree(7) == 2);
  CHECK(min_degree(g) == 2);
  // attachment vertices are the lowest id per clique: 0 and 3
  CHECK(g.adjacent(7, 0));
  CHECK(g.adjacent(7, 3));
  CHECK_FALSE(g.adjacent(7, 1));
  CHECK(sigma_star(g).value == ExtInt(7));
  CHECK_FALSE(oracle_min_2pp(g, false).has_value());
  auto out = construct_2pp(g);
  CHECK(out.status == PartitionOutcome::Status::PreconditionFailed);

  // every large independent set weighs exactly n - 1
  enumerate_independent_sets(g, [&](const std::vector<int>& s) {
    if (s.empty()) return;
    auto rep = independent_set_report(g, s);
    if (rep.is_large) CHECK(rep.weight == g.order() - 1);
  });
}

TEST_CASE("sharp gt prime structure and frozen invariants") {
  SharpnessSpec spec{{3, 4}};
  Graph g = gen_sharp_gt_prime(spec);
  CHECK(g.order() == 8);
  CHECK(g.degree(7) == 7);  // hub joined to every clique vertex
  CHECK(sigma_star(g).value.is_infinite());
  CHECK(alpha_star(g).value <= 2);
  auto r = oracle_min_2pp(g, false);
  REQUIRE(r.has_value());
  CHECK(r->first == 2);
  auto out = construct_2pp(g);
  REQUIRE(out.status == PartitionOutcome::Status::Partitioned);
  CHECK(out.partition->parts.size() == 2);
  CHECK(verify_partition(g, *out.partition).ok);

  // d = 3 boundary case
  SharpnessSpec spec3{{4, 4, 4}};
  Graph g3 = gen_sharp_gt(spec3);
  CHECK(g3.order() == 13);
  CHECK(sigma_star(g3).value == ExtInt(12));
  Graph g3p = gen_sharp_gt_prime(spec3);
  CHECK(sigma_star(g3p).value.is_infinite());
  CHECK(alpha_star(g3p).value <= 3);
}
