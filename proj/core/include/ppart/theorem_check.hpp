#ifndef PPART_THEOREM_CHECK_HPP
#define PPART_THEOREM_CHECK_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ppart/graph.hpp"
#include "ppart/oracle.hpp"

namespace ppart {

// What to check over a corpus.  Each check evaluates one published
// statement's hypothesis per graph and records a violation whenever the
// conclusion fails; a clean run has an empty violation list.
enum class CheckKind {
  Ind,             // sigma* >= n  =>  partitioned within alpha* or exceptional
  Prop1,           // the degree-sum chain delta/sigma2 -> pi2 -> sigma*
  Prop2,           // alpha* . sigma2 <= 2(n-1) for non-complete, delta >= 1
  Lemmas,          // component monotonicity of sigma*/alpha*; cut => alpha*>=2
  CorollaryPi,     // pi2 >= n-delta  =>  partitioned or balanced exception
  CorollarySigma,  // sigma2 version with the 2(n-1)/sigma2 part bound
  Almost,          // sigma* >= n  =>  almost partition within alpha*
};

std::string to_string(CheckKind check);
std::optional<CheckKind> check_kind_from_name(std::string_view name);

struct CorpusSpec {
  enum class Kind { Exhaustive, Random };
  Kind kind = Kind::Exhaustive;
  int n = 0;
  long long count = 0;     // Random
  double p = 0.5;          // Random
  std::uint64_t seed = 1;  // Random; graph i uses seed + i

  std::string describe() const;
};

long long corpus_size(const CorpusSpec& corpus);
// Graph number `index` of the corpus.  Exhaustive corpora enumerate all
// labeled graphs of order n (edge masks in graph6 column order), n <= 7.
Graph corpus_graph(const CorpusSpec& corpus, long long index);

struct TheoremCheckReport {
  std::string corpus;
  std::string check;
  long long total = 0;
  std::map<std::string, long long> tallies;
  std::vector<std::string> violations;  // graph6, sorted

  bool all_held() const { return violations.empty(); }
  std::string to_text() const;
};

// Runs the check over every corpus graph, distributing graphs across
// `threads` workers (0 = hardware concurrency).  Statements that would
// need an oracle call beyond the budget are tallied under skipped_budget
// instead of being decided.
TheoremCheckReport run_theorem_check(const CorpusSpec& corpus,
                                     CheckKind check,
                                     const OracleBudget& budget = {},
                                     int threads = 0);

}  // namespace ppart

#endif
