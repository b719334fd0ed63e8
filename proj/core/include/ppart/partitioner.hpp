#ifndef PPART_PARTITIONER_HPP
#define PPART_PARTITIONER_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ppart/block_tree.hpp"
#include "ppart/exceptional.hpp"
#include "ppart/graph.hpp"
#include "ppart/invariants.hpp"

namespace ppart {

// In a 2-proper partition every part induces a 2-connected subgraph.  The
// almost variant relaxes the first part to "2-connected or a single edge".
enum class PartitionKind { TwoProper, AlmostTwoProper };

struct Partition {
  PartitionKind kind = PartitionKind::TwoProper;
  std::vector<std::vector<int>> parts;  // disjoint, non-empty, sorted ids
};

// Sorts each part, then parts by smallest member; for AlmostTwoProper the
// (at most one) part inducing a single edge is moved to the front.
Partition normalized(const Graph& g, Partition p);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> issues;  // one line per offending part/vertex
};

VerifyResult verify_partition(const Graph& g, const Partition& p);

// Reasons the structural construction can give up; named after what broke.
enum class FailedStep {
  CarrierMissing,     // no block of B - u_B contains all of X_B
  NoEligibleChild,    // a cut vertex with no child block having X nonempty
  PartNotBiconnected, // assembled partition failed verification
  BoundExceeded,      // best partition found uses more than alpha* parts
  NoPartitionExists,  // exhaustive search proved there is none
  OverBudget,         // order exceeds the oracle fallback budget
};

std::string to_string(FailedStep step);

struct ConstructionDiagnostic {
  FailedStep step;
  int block = -1;  // block id when the failure is tied to one, else -1
  std::string detail;
};

struct PartitionOutcome {
  enum class Status { Partitioned, Exceptional, PreconditionFailed,
                      ConstructionFailure };
  Status status = Status::ConstructionFailure;
  std::optional<Partition> partition;          // Partitioned
  int parts_bound = 0;                         // alpha*(g) when Partitioned
  std::string construction_path;               // e.g. "tree", "biconnected"
  std::optional<ExceptionalClass> exceptional; // Exceptional
  std::optional<IndependentSetReport> witness; // PreconditionFailed
  std::optional<ConstructionDiagnostic> diagnostic;  // ConstructionFailure
};

struct ConstructOptions {
  int oracle_budget = 12;  // max order for the exhaustive fallback
  bool try_all_roots = false;
};

// Bottom-up assembly over the rooted block tree.  Returns the assembled
// partition (not verified here) or a diagnostic when assembly is impossible.
std::variant<Partition, ConstructionDiagnostic> tree_construct(
    const Graph& g, const RootedBlockTree& t);

// Full pipeline: precondition sigma* >= n, exceptional recognition,
// per-component recursion, then construction with fallbacks.  A Partitioned
// outcome is always verified and satisfies |parts| <= alpha*(g).
PartitionOutcome construct_2pp(const Graph& g, const ConstructOptions& opt = {});

// Same contract but the result may be almost 2-proper; exceptional graphs
// get their closed-form almost partitions instead of an Exceptional status.
PartitionOutcome construct_almost_2pp(const Graph& g,
                                      const ConstructOptions& opt = {});

}  // namespace ppart

#endif
