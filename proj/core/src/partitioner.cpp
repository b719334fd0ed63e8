#include "ppart/partitioner.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ppart/isomorphism.hpp"
#include "ppart/oracle.hpp"

namespace ppart {

std::string to_string(FailedStep step) {
  switch (step) {
    case FailedStep::CarrierMissing: return "carrier-missing";
    case FailedStep::NoEligibleChild: return "no-eligible-child";
    case FailedStep::PartNotBiconnected: return "part-not-biconnected";
    case FailedStep::BoundExceeded: return "bound-exceeded";
    case FailedStep::NoPartitionExists: return "no-partition-exists";
    case FailedStep::OverBudget: return "over-budget";
  }
  return "?";
}

Partition normalized(const Graph& g, Partition p) {
  for (auto& part : p.parts) std::sort(part.begin(), part.end());
  std::sort(p.parts.begin(), p.parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  if (p.kind == PartitionKind::AlmostTwoProper) {
    for (size_t i = 0; i < p.parts.size(); ++i) {
      const auto& part = p.parts[i];
      if (part.size() == 2 && g.adjacent(part[0], part[1])) {
        std::rotate(p.parts.begin(), p.parts.begin() + i,
                    p.parts.begin() + i + 1);
        break;
      }
    }
  }
  return p;
}

VerifyResult verify_partition(const Graph& g, const Partition& p) {
  VerifyResult r;
  auto issue = [&](const std::string& s) {
    r.ok = false;
    r.issues.push_back(s);
  };

  std::vector<int> count(g.order(), 0);
  for (size_t i = 0; i < p.parts.size(); ++i) {
    if (p.parts[i].empty()) issue("part " + std::to_string(i) + " is empty");
    for (int v : p.parts[i]) {
      if (v < 0 || v >= g.order()) {
        issue("part " + std::to_string(i) + ": vertex " + std::to_string(v) +
              " out of range");
        continue;
      }
      if (++count[v] == 2)
        issue("vertex " + std::to_string(v) + " covered more than once");
    }
  }
  for (int v = 0; v < g.order(); ++v)
    if (count[v] == 0) issue("vertex " + std::to_string(v) + " not covered");

  for (size_t i = 0; i < p.parts.size(); ++i) {
    std::vector<int> part = p.parts[i];
    std::sort(part.begin(), part.end());
    part.erase(std::unique(part.begin(), part.end()), part.end());
    if (part.empty() || part.back() >= g.order() || part.front() < 0) continue;
    const std::string label = "part " + std::to_string(i);
    if (part.size() == 1) {
      issue(label + " {" + std::to_string(part[0]) + "} is a single vertex");
      continue;
    }
    if (part.size() == 2) {
      bool edge = g.adjacent(part[0], part[1]);
      if (!edge)
        issue(label + " has two non-adjacent vertices");
      else if (!(p.kind == PartitionKind::AlmostTwoProper && i == 0))
        issue(label + " induces a single edge, which only the first part of "
                      "an almost partition may");
      continue;
    }
    if (!is_biconnected(induced_subgraph(g, part)))
      issue(label + " does not induce a 2-connected subgraph");
  }
  return r;
}

namespace {

std::string vertex_list(const std::vector<int>& vs) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
  os << "}";
  return os.str();
}

}  // namespace

std::variant<Partition, ConstructionDiagnostic> tree_construct(
    const Graph& g, const RootedBlockTree& t) {
  const int nb = t.decomp.block_count();
  std::vector<std::vector<std::vector<int>>> p_minus(nb);

  // Child block at cut x whose X set is nonempty (smallest id), so its full
  // partition contributes exactly one part per X-block of its subtree.
  auto eligible_child = [&](int x) -> int {
    for (int c : t.cut_children[x])
      if (!t.x_set[c].empty()) return c;
    return -1;
  };

  // Full partition of G(b): the block itself plus the partial partitions of
  // all children.
  auto full_of = [&](int b) {
    std::vector<std::vector<int>> parts{t.decomp.blocks[b]};
    for (int x : t.child_cuts[b])
      for (int c : t.cut_children[x])
        for (const auto& part : p_minus[c]) parts.push_back(part);
    return parts;
  };

  // Children before parents.
  for (auto it = t.bfs_order.rbegin(); it != t.bfs_order.rend(); ++it) {
    int b = *it;
    if (b == t.root) continue;

    if (t.child_cuts[b].empty()) {
      // Leaf: everything but the parent cut vertex becomes one part.
      std::vector<int> part;
      for (int v : t.decomp.blocks[b])
        if (v != t.parent_cut[b]) part.push_back(v);
      p_minus[b] = {part};
      continue;
    }

    if (t.x_set[b].empty()) {
      // Every non-parent vertex of b is a cut vertex; each is covered by
      // the full partition of one eligible child.
      std::vector<std::vector<int>> parts;
      for (int x : t.child_cuts[b]) {
        int bx = eligible_child(x);
        if (bx == -1)
          return ConstructionDiagnostic{
              FailedStep::NoEligibleChild, b,
              "cut vertex " + std::to_string(x) +
                  " has no child block with a non-cut vertex"};
        for (auto& part : full_of(bx)) parts.push_back(std::move(part));
        for (int c : t.cut_children[x])
          if (c != bx)
            for (const auto& part : p_minus[c]) parts.push_back(part);
      }
      p_minus[b] = std::move(parts);
      continue;
    }

    // Mixed block: the carrier covers X_b and the cut vertices inside it;
    // cut vertices outside the carrier are covered by an eligible child.
    if (!t.carrier[b])
      return ConstructionDiagnostic{
          FailedStep::CarrierMissing, b,
          "no block of block " + std::to_string(b) + " minus its parent cut "
          "vertex contains all of " + vertex_list(t.x_set[b])};
    const auto& carrier = *t.carrier[b];
    std::vector<std::vector<int>> parts{carrier};
    for (int x : t.child_cuts[b]) {
      bool in_carrier =
          std::binary_search(carrier.begin(), carrier.end(), x);
      if (in_carrier) {
        for (int c : t.cut_children[x])
          for (const auto& part : p_minus[c]) parts.push_back(part);
      } else {
        int bx = eligible_child(x);
        if (bx == -1)
          return ConstructionDiagnostic{
              FailedStep::NoEligibleChild, b,
              "cut vertex " + std::to_string(x) +
                  " has no child block with a non-cut vertex"};
        for (auto& part : full_of(bx)) parts.push_back(std::move(part));
        for (int c : t.cut_children[x])
          if (c != bx)
            for (const auto& part : p_minus[c]) parts.push_back(part);
      }
    }
    p_minus[b] = std::move(parts);
  }

  Partition p;
  p.kind = PartitionKind::TwoProper;
  p.parts = full_of(t.root);
  return normalized(g, std::move(p));
}

namespace {

PartitionOutcome partitioned(const Graph& g, Partition p, int bound,
                             std::string path) {
  PartitionOutcome out;
  out.status = PartitionOutcome::Status::Partitioned;
  out.partition = normalized(g, std::move(p));
  out.parts_bound = bound;
  out.construction_path = std::move(path);
  // soundness gate: a Partitioned outcome is always verified
  auto v = verify_partition(g, *out.partition);
  if (!v.ok)
    throw std::logic_error("constructed partition failed verification: " +
                           v.issues.front());
  return out;
}

PartitionOutcome failure(ConstructionDiagnostic d) {
  PartitionOutcome out;
  out.status = PartitionOutcome::Status::ConstructionFailure;
  out.diagnostic = std::move(d);
  return out;
}

// Fallback: a 3-vertex end-block whose removal leaves a 2-connected rest.
std::optional<Partition> k3_end_block_partition(const Graph& g) {
  auto decomp = block_decomposition(g);
  for (int b : end_blocks(decomp)) {
    if (decomp.blocks[b].size() != 3) continue;
    std::vector<int> rest;
    for (int v = 0; v < g.order(); ++v)
      if (!std::binary_search(decomp.blocks[b].begin(),
                              decomp.blocks[b].end(), v))
        rest.push_back(v);
    if (rest.size() < 3 || !is_biconnected(induced_subgraph(g, rest)))
      continue;
    Partition p;
    p.parts = {decomp.blocks[b], rest};
    return p;
  }
  return std::nullopt;
}

// Fallback: a block whose removal leaves only cliques of size >= 3.
std::optional<Partition> clique_components_partition(const Graph& g,
                                                     int max_parts) {
  auto decomp = block_decomposition(g);
  for (int b = 0; b < decomp.block_count(); ++b) {
    const auto& block = decomp.blocks[b];
    if (block.size() < 3) continue;
    std::vector<int> rest;
    for (int v = 0; v < g.order(); ++v)
      if (!std::binary_search(block.begin(), block.end(), v)) rest.push_back(v);
    if (rest.empty()) continue;
    Graph h = induced_subgraph(g, rest);
    auto comps = components(h);
    if (1 + static_cast<int>(comps.size()) > max_parts) continue;
    bool all_cliques = true;
    for (const auto& comp : comps) {
      if (comp.size() < 3) {
        all_cliques = false;
        break;
      }
      for (size_t i = 0; i < comp.size() && all_cliques; ++i)
        for (size_t j = i + 1; j < comp.size(); ++j)
          if (!h.adjacent(comp[i], comp[j])) {
            all_cliques = false;
            break;
          }
      if (!all_cliques) break;
    }
    if (!all_cliques) continue;
    Partition p;
    p.parts.push_back(block);
    for (const auto& comp : comps) {
      std::vector<int> part;
      for (int idx : comp) part.push_back(rest[idx]);
      p.parts.push_back(std::move(part));
    }
    return p;
  }
  return std::nullopt;
}

}  // namespace

PartitionOutcome construct_2pp(const Graph& g, const ConstructOptions& opt) {
  const int n = g.order();
  if (n == 0) {
    Partition p;
    return partitioned(g, p, 0, "empty");
  }

  // (1) the partition theory needs sigma* >= n
  auto pre = sigma_star_at_least(g, n);
  if (!pre.holds) {
    PartitionOutcome out;
    out.status = PartitionOutcome::Status::PreconditionFailed;
    out.witness = pre.counterexample;
    return out;
  }

  // (2) the known exceptions
  if (auto cls = recognize(g)) {
    PartitionOutcome out;
    out.status = PartitionOutcome::Status::Exceptional;
    out.exceptional = cls;
    return out;
  }

  const int bound = alpha_star(g).value;

  // (3) disconnected: each component on its own (their sigma* only grows)
  auto comps = components(g);
  if (comps.size() > 1) {
    Partition p;
    for (const auto& comp : comps) {
      Graph sub = induced_subgraph(g, comp);
      PartitionOutcome rec = construct_2pp(sub, opt);
      if (rec.status != PartitionOutcome::Status::Partitioned) {
        // remap a precondition witness into g's ids; diagnostics pass through
        if (rec.witness) {
          for (auto& v : rec.witness->vertices) v = comp[v];
        }
        return rec;
      }
      for (const auto& part : rec.partition->parts) {
        std::vector<int> mapped;
        for (int v : part) mapped.push_back(comp[v]);
        p.parts.push_back(std::move(mapped));
      }
    }
    if (static_cast<int>(p.parts.size()) > bound)
      return failure({FailedStep::BoundExceeded, -1,
                      "component union uses " +
                          std::to_string(p.parts.size()) + " parts, bound " +
                          std::to_string(bound)});
    return partitioned(g, std::move(p), bound, "components");
  }

  // (4) 2-connected graphs are their own partition
  if (is_biconnected(g)) {
    Partition p;
    p.parts = {std::vector<int>(static_cast<size_t>(n))};
    for (int v = 0; v < n; ++v) p.parts[0][v] = v;
    return partitioned(g, std::move(p), bound, "biconnected");
  }

  // (5) block-tree construction; connected and with >= 2 blocks here
  std::optional<ConstructionDiagnostic> first_diag;
  std::optional<Partition> best;
  auto try_root = [&](int root) {
    auto result = tree_construct(g, root_block_tree(g, root));
    if (auto* diag = std::get_if<ConstructionDiagnostic>(&result)) {
      if (!first_diag) first_diag = *diag;
      return;
    }
    auto& p = std::get<Partition>(result);
    auto v = verify_partition(g, p);
    if (!v.ok) {
      if (!first_diag)
        first_diag = ConstructionDiagnostic{FailedStep::PartNotBiconnected, -1,
                                            v.issues.front()};
      return;
    }
    if (static_cast<int>(p.parts.size()) > bound) {
      if (!first_diag)
        first_diag = ConstructionDiagnostic{
            FailedStep::BoundExceeded, -1,
            std::to_string(p.parts.size()) + " parts, bound " +
                std::to_string(bound)};
      return;
    }
    if (!best || p.parts.size() < best->parts.size()) best = std::move(p);
  };
  if (opt.try_all_roots) {
    for (int root : end_blocks(block_decomposition(g))) try_root(root);
  } else {
    try_root(root_block_tree(g).root);
  }
  if (best) return partitioned(g, std::move(*best), bound, "tree");

  // (a) 3-vertex end-block whose removal leaves a 2-connected graph
  if (auto p = k3_end_block_partition(g)) {
    if (static_cast<int>(p->parts.size()) <= bound) {
      auto v = verify_partition(g, *p);
      if (v.ok) return partitioned(g, std::move(*p), bound, "k3-end-block");
    }
  }

  // (b) a block whose removal leaves only cliques
  if (auto p = clique_components_partition(g, bound)) {
    auto v = verify_partition(g, *p);
    if (v.ok) return partitioned(g, std::move(*p), bound, "clique-components");
  }

  // (c) exhaustive search at small orders
  if (n <= opt.oracle_budget) {
    OracleBudget budget;
    budget.max_n_partition = opt.oracle_budget;
    auto found = oracle_min_2pp(g, false, budget);
    if (!found)
      return failure({FailedStep::NoPartitionExists, -1,
                      "exhaustive search found no 2-proper partition"});
    if (found->first > bound)
      return failure({FailedStep::BoundExceeded, -1,
                      "minimum has " + std::to_string(found->first) +
                          " parts, bound " + std::to_string(bound)});
    return partitioned(g, std::move(found->second), bound, "oracle");
  }

  // (d) out of options
  if (first_diag) return failure(std::move(*first_diag));
  return failure({FailedStep::OverBudget, -1,
                  "order " + std::to_string(n) +
                      " exceeds the oracle fallback budget"});
}

PartitionOutcome construct_almost_2pp(const Graph& g,
                                      const ConstructOptions& opt) {
  const int n = g.order();
  if (n == 0) {
    Partition p;
    p.kind = PartitionKind::AlmostTwoProper;
    return partitioned(g, p, 0, "empty");
  }

  auto pre = sigma_star_at_least(g, n);
  if (!pre.holds) {
    PartitionOutcome out;
    out.status = PartitionOutcome::Status::PreconditionFailed;
    out.witness = pre.counterexample;
    return out;
  }

  const auto cls = recognize(g);
  if (cls) {
    // closed forms, stated on the canonical labeling and carried over to g
    // by an isomorphism; F11/F12 go through the bounded search instead
    Partition p;
    p.kind = PartitionKind::AlmostTwoProper;
    std::string path = "closed-form";
    std::vector<std::vector<int>> canonical_parts;
    switch (cls->kind) {
      case ExceptionalClass::Kind::K2:
        canonical_parts = {{0, 1}};
        break;
      case ExceptionalClass::Kind::F5:
        // the b3b4 edge, then the triangle on a, b1, b2
        canonical_parts = {{3, 4}, {0, 1, 2}};
        break;
      case ExceptionalClass::Kind::H: {
        // the c1c2 edge, then everything else (a and b keep it 2-connected)
        std::vector<int> rest{0, 1};
        for (int v = 4; v < n; ++v) rest.push_back(v);
        canonical_parts = {{2, 3}, rest};
        break;
      }
      case ExceptionalClass::Kind::F11:
      case ExceptionalClass::Kind::F12: {
        OracleBudget budget;
        budget.max_n_partition = std::max(opt.oracle_budget, 12);
        auto found = oracle_min_2pp(g, true, budget);
        if (!found)
          return failure({FailedStep::NoPartitionExists, -1,
                          "no almost partition found for " + cls->name()});
        p = std::move(found->second);
        path = "almost-oracle";
        break;
      }
    }
    if (!canonical_parts.empty()) {
      auto iso = find_isomorphism(generate(*cls), g);
      if (!iso)
        throw std::logic_error("recognized class does not map back onto g");
      for (const auto& cpart : canonical_parts) {
        std::vector<int> part;
        for (int v : cpart) part.push_back((*iso)[v]);
        p.parts.push_back(std::move(part));
      }
    }
    const int bound = alpha_star(g).value;
    if (static_cast<int>(p.parts.size()) > bound)
      return failure({FailedStep::BoundExceeded, -1,
                      "closed form exceeds the part bound"});
    return partitioned(g, std::move(p), bound, path);
  }

  PartitionOutcome strict = construct_2pp(g, opt);
  if (strict.status == PartitionOutcome::Status::Partitioned) {
    strict.partition->kind = PartitionKind::AlmostTwoProper;
    strict.partition = normalized(g, std::move(*strict.partition));
    return strict;
  }
  if (strict.status == PartitionOutcome::Status::ConstructionFailure &&
      n <= opt.oracle_budget) {
    OracleBudget budget;
    budget.max_n_partition = opt.oracle_budget;
    const int bound = alpha_star(g).value;
    auto found = oracle_min_2pp(g, true, budget);
    if (found && found->first <= bound)
      return partitioned(g, std::move(found->second), bound, "almost-oracle");
  }
  return strict;
}

}  // namespace ppart
