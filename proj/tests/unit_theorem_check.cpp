#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "ppart/generators.hpp"
#include "ppart/theorem_check.hpp"

using namespace ppart;

static CorpusSpec exhaustive(int n) {
  CorpusSpec c;
  c.kind = CorpusSpec::Kind::Exhaustive;
  c.n = n;
  return c;
}

static CorpusSpec random_corpus(long long count, int n, double p,
                                std::uint64_t seed) {
  CorpusSpec c;
  c.kind = CorpusSpec::Kind::Random;
  c.count = count;
  c.n = n;
  c.p = p;
  c.seed = seed;
  return c;
}

TEST_CASE("corpus plumbing") {
  CHECK(corpus_size(exhaustive(4)) == 64);
  CHECK(corpus_size(exhaustive(0)) == 1);
  CHECK(corpus_size(random_corpus(17, 9, 0.5, 3)) == 17);
  CHECK_THROWS_AS(corpus_size(exhaustive(8)), std::invalid_argument);
  // exhaustive index bits follow the emit order of the adjacency triangle
  Graph g = corpus_graph(exhaustive(3), 0b111);
  CHECK(g.edge_count() == 3);
  Graph h = corpus_graph(exhaustive(3), 0b001);
  CHECK(h.adjacent(0, 1));
  CHECK(h.edge_count() == 1);
  // random corpus graphs derive their seed from the index
  Graph r0 = corpus_graph(random_corpus(5, 8, 0.5, 42), 0);
  Graph r1 = corpus_graph(random_corpus(5, 8, 0.5, 42), 1);
  CHECK_FALSE(r0 == r1);
  CHECK(r0 == gen_random(8, 0.5, 42));
  CHECK(r1 == gen_random(8, 0.5, 43));
}

TEST_CASE("check names round trip") {
  for (CheckKind c : {CheckKind::Ind, CheckKind::Prop1, CheckKind::Prop2,
                      CheckKind::Lemmas, CheckKind::CorollaryPi,
                      CheckKind::CorollarySigma, CheckKind::Almost}) {
    auto back = check_kind_from_name(to_string(c));
    REQUIRE(back.has_value());
    CHECK(*back == c);
  }
  CHECK_FALSE(check_kind_from_name("nope").has_value());
}

TEST_CASE("exhaustive n = 5: the main statement holds, exceptional = 15") {
  auto rep = run_theorem_check(exhaustive(5), CheckKind::Ind, {}, 4);
  CHECK(rep.total == 1024);
  CHECK(rep.violations.empty());
  CHECK(rep.all_held());
  // the labeled copies of the 5-vertex exception
  CHECK(rep.tallies.at("exceptional") == 15);
}

TEST_CASE("exhaustive n <= 5: every statement holds for n >= 2") {
  for (int n = 2; n <= 5; ++n) {
    for (CheckKind c : {CheckKind::Ind, CheckKind::Prop1, CheckKind::Prop2,
                        CheckKind::Lemmas, CheckKind::CorollaryPi,
                        CheckKind::CorollarySigma, CheckKind::Almost}) {
      auto rep = run_theorem_check(exhaustive(n), c, {}, 4);
      INFO("n=", n, " check=", to_string(c));
      CHECK(rep.violations.empty());
    }
  }
}

TEST_CASE("the one-vertex graph violates the printed implication chain") {
  // K1 has pi2 = +inf >= n - delta but sigma* = 0 < 1: the statement as
  // printed quantifies over all graphs and n = 1 falsifies it
  auto rep = run_theorem_check(exhaustive(1), CheckKind::Prop1, {}, 1);
  CHECK(rep.total == 1);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].find("prop1b") != std::string::npos);
  // the corollary inherits the same degenerate case
  auto rep2 = run_theorem_check(exhaustive(1), CheckKind::CorollaryPi, {}, 1);
  CHECK(rep2.violations.size() == 1);
}

TEST_CASE("random corpora stay clean") {
  for (CheckKind c : {CheckKind::Ind, CheckKind::Prop2, CheckKind::Lemmas}) {
    auto rep = run_theorem_check(random_corpus(300, 10, 0.4, 7), c, {}, 4);
    CHECK(rep.total == 300);
    CHECK(rep.violations.empty());
  }
}

TEST_CASE("reports are deterministic and thread-count independent") {
  auto a = run_theorem_check(exhaustive(4), CheckKind::Ind, {}, 1);
  auto b = run_theorem_check(exhaustive(4), CheckKind::Ind, {}, 4);
  CHECK(a.total == b.total);
  CHECK(a.tallies == b.tallies);
  CHECK(a.violations == b.violations);
  CHECK(a.to_text() == b.to_text());
}

TEST_CASE("budget gating tallies instead of failing") {
  OracleBudget tiny;
  tiny.max_n_partition = 4;
  // graphs beyond the partition budget that need a fallback are skipped,
  // never counted as violations
  auto rep = run_theorem_check(random_corpus(200, 9, 0.25, 11), CheckKind::Ind,
                               tiny, 4);
  CHECK(rep.violations.empty());
}

TEST_CASE("report text format") {
  auto rep = run_theorem_check(exhaustive(3), CheckKind::Prop2, {}, 1);
  std::string text = rep.to_text();
  CHECK(text.find("corpus=exhaustive n=3") != std::string::npos);
  CHECK(text.find("check=prop2") != std::string::npos);
  CHECK(text.find("total=8") != std::string::npos);
  CHECK(text.find("violations=0") != std::string::npos);
}
