#include <benchmark/benchmark.h>

#include "ppart/block_tree.hpp"
#include "ppart/exceptional.hpp"
#include "ppart/generators.hpp"
#include "ppart/invariants.hpp"
#include "ppart/oracle.hpp"
#include "ppart/partitioner.hpp"
#include "ppart/theorem_check.hpp"

using namespace ppart;

static void BM_BlockDecomposition(benchmark::State& state) {
  Graph g = gen_random(static_cast<int>(state.range(0)), 0.02, 7);
  for (auto _ : state) {
    auto d = block_decomposition(g);
    benchmark::DoNotOptimize(d.blocks.size());
  }
}
BENCHMARK(BM_BlockDecomposition)->Arg(100)->Arg(400);

static void BM_SigmaStar(benchmark::State& state) {
  Graph g = gen_random(static_cast<int>(state.range(0)), 0.3, 11);
  for (auto _ : state) {
    auto r = sigma_star(g);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_SigmaStar)->Arg(16)->Arg(32)->Arg(48);

static void BM_OracleSigmaStar(benchmark::State& state) {
  Graph g = gen_random(16, 0.3, 11);
  for (auto _ : state) {
    auto v = oracle_sigma_star(g);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_OracleSigmaStar);

static void BM_OracleMin2pp_H45(benchmark::State& state) {
  Graph g = generate(ExceptionalClass::h(4, 5));
  for (auto _ : state) {
    auto m = oracle_min_2pp(g);
    benchmark::DoNotOptimize(m.has_value());
  }
}
BENCHMARK(BM_OracleMin2pp_H45);

static void BM_Recognize_F12(benchmark::State& state) {
  Graph g = generate(ExceptionalClass::f12(true, false, true, false));
  SplitMix64 rng(3);
  std::vector<int> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[i] = i;
  for (int i = g.order() - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.next_int(i + 1)]);
  Graph h = permuted(g, perm);
  for (auto _ : state) {
    auto cls = recognize(h);
    benchmark::DoNotOptimize(cls.has_value());
  }
}
BENCHMARK(BM_Recognize_F12);

static void BM_ConstructSharpPrime(benchmark::State& state) {
  Graph g = gen_sharp_gt_prime(SharpnessSpec{{6, 6, 6, 6, 6}});
  for (auto _ : state) {
    auto out = construct_2pp(g, {});
    benchmark::DoNotOptimize(out.status);
  }
}
BENCHMARK(BM_ConstructSharpPrime);

static void BM_TheoremCheckExhaustive5(benchmark::State& state) {
  CorpusSpec corpus;
  corpus.kind = CorpusSpec::Kind::Exhaustive;
  corpus.n = 5;
  for (auto _ : state) {
    auto rep = run_theorem_check(corpus, CheckKind::Ind, {},
                                 static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(rep.total);
  }
}
BENCHMARK(BM_TheoremCheckExhaustive5)->Arg(1)->Arg(4)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
