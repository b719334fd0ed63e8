// ppart: invariants, 2-proper partitions, exceptional families, oracles.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ppart/exceptional.hpp"
#include "ppart/generators.hpp"
#include "ppart/invariants.hpp"
#include "ppart/io.hpp"
#include "ppart/oracle.hpp"
#include "ppart/partitioner.hpp"
#include "ppart/theorem_check.hpp"

using namespace ppart;

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
  std::string text = read_input(path);
  if (format == "edgelist") return parse_edge_list(text);
  if (format == "graph6") {
    // allow trailing newline / surrounding blank lines
    std::istringstream is{text};
    std::string line;
    while (std::getline(is, line))
      if (!line.empty()) return parse_graph6(line);
    throw std::runtime_error("empty graph6 input");
  }
  return parse_graph_auto(text);
}

std::string join_ids(const std::vector<int>& ids) {
  std::string s;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(ids[i]);
  }
  return s;
}

void emit_graph(const Graph& g, const std::string& format) {
  if (format == "graph6")
    std::cout << emit_graph6(g) << "\n";
  else
    std::cout << emit_edge_list(g);
}

int env_oracle_max_n() {
  const char* v = std::getenv("PP_ORACLE_MAX_N");
  if (!v) return -1;
  try {
    return std::stoi(v);
  } catch (...) {
    throw std::runtime_error("PP_ORACLE_MAX_N is not an integer");
  }
}

OracleBudget effective_budget() {
  OracleBudget b;
  int env = env_oracle_max_n();
  if (env >= 0) {
    b.max_n_partition = env;
    b.max_n_invariants = env;
  }
  return b;
}

int cmd_invariants(const std::string& input, const std::string& format) {
  Graph g = load_graph(input, format);
  if (g.order() == 0) {
    std::cout << "n=0\n";
    return 0;
  }
  auto s = compute_summary(g);
  std::cout << "n=" << s.n << " delta=" << s.delta
            << " sigma2=" << s.sigma2.to_string()
            << " pi2=" << s.pi2.to_string()
            << " sigma_star=" << s.sigma_star.value.to_string()
            << " alpha_star=" << s.alpha_star.value << " alpha=" << s.alpha
            << "\n";
  if (s.sigma_star.witness)
    std::cout << "sigma_star_witness=" << join_ids(s.sigma_star.witness->vertices)
              << "\n";
  std::cout << "alpha_star_witness=" << join_ids(s.alpha_star.witness.vertices)
            << "\n";
  return 0;
}

int cmd_partition(const std::string& input, const std::string& format,
                  bool almost, bool all_roots, int fallback_budget) {
  Graph g = load_graph(input, format);
  ConstructOptions opt;
  opt.oracle_budget = fallback_budget;
  opt.try_all_roots = all_roots;
  PartitionOutcome out =
      almost ? construct_almost_2pp(g, opt) : construct_2pp(g, opt);
  switch (out.status) {
    case PartitionOutcome::Status::Partitioned:
      std::cout << "status=partitioned path=" << out.construction_path
                << " parts=" << out.partition->parts.size()
                << " bound=" << out.parts_bound << "\n";
      std::cout << serialize_partition(*out.partition);
      return 0;
    case PartitionOutcome::Status::Exceptional:
      std::cout << "status=exceptional\n";
      std::cout << "exceptional: " << out.exceptional->name() << "\n";
      return 0;
    case PartitionOutcome::Status::PreconditionFailed:
      std::cout << "status=precondition-failed\n";
      std::cout << "witness=" << join_ids(out.witness->vertices)
                << "\nwitness_weight=" << out.witness->weight << "\n";
      return 2;
    case PartitionOutcome::Status::ConstructionFailure:
      std::cout << "status=construction-failure step="
                << to_string(out.diagnostic->step)
                << " block=" << out.diagnostic->block << "\n";
      if (!out.diagnostic->detail.empty())
        std::cout << "detail=" << out.diagnostic->detail << "\n";
      return 3;
  }
  return 3;
}

int cmd_verify(const std::string& graph_path, const std::string& part_path,
               const std::string& format, const std::string& kind) {
  Graph g = load_graph(graph_path, format);
  Partition p;
  try {
    p = parse_partition(read_input(part_path));
  } catch (const std::exception& e) {
    std::cerr << "partition file: " << e.what() << "\n";
    return 4;
  }
  if (kind == "2proper") p.kind = PartitionKind::TwoProper;
  if (kind == "almost") p.kind = PartitionKind::AlmostTwoProper;
  auto v = verify_partition(g, p);
  if (v.ok) {
    std::cout << "ok\n";
    return 0;
  }
  for (const auto& issue : v.issues) std::cout << "fail: " << issue << "\n";
  return 1;
}

int cmd_oracle(const std::string& input, const std::string& format,
               const std::string& what, bool almost) {
  Graph g = load_graph(input, format);
  OracleBudget budget = effective_budget();
  if (what == "all" || what == "sigma-star")
    std::cout << "oracle_sigma_star=" << oracle_sigma_star(g, budget).to_string()
              << "\n";
  if (what == "all" || what == "alpha-star")
    std::cout << "oracle_alpha_star=" << oracle_alpha_star(g, budget) << "\n";
  if (what == "all" || what == "min2pp") {
    auto r = oracle_min_2pp(g, almost, budget);
    if (!r) {
      std::cout << "oracle_min_2pp=none\n";
    } else {
      std::cout << "oracle_min_2pp=" << r->first << "\n";
      std::cout << serialize_partition(r->second);
    }
  }
  return 0;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

ExceptionalClass f11_from_l(const std::string& l) {
  bool ab1 = false, ab2 = false;
  for (const auto& tok : split_csv(l)) {
    if (tok == "ab1") ab1 = true;
    else if (tok == "ab2") ab2 = true;
    else throw std::runtime_error("unknown L edge for f11: " + tok);
  }
  return ExceptionalClass::f11(ab1, ab2);
}

ExceptionalClass f12_from_l(const std::string& l) {
  bool ab1 = false, ab2 = false, ac9 = false, b2c9 = false;
  for (const auto& tok : split_csv(l)) {
    if (tok == "ab1") ab1 = true;
    else if (tok == "ab2") ab2 = true;
    else if (tok == "ac9") ac9 = true;
    else if (tok == "b2c9") b2c9 = true;
    else throw std::runtime_error("unknown L edge for f12: " + tok);
  }
  return ExceptionalClass::f12(ab1, ab2, ac9, b2c9);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree conditions, 2-proper partitions and their oracles"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "auto";
  std::string out_format = "edgelist";

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "graph file, or - for stdin");
    cmd->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  };

  auto* inv = app.add_subcommand("invariants",
                                 "degree and independent-set invariants");
  add_input(inv);

  auto* part = app.add_subcommand("partition", "construct a 2-proper partition");
  add_input(part);
  bool almost = false, all_roots = false;
  int fallback_budget = 12;
  {
    int env = env_oracle_max_n();
    if (env >= 0) fallback_budget = env;
  }
  part->add_flag("--almost", almost, "allow one single-edge part");
  part->add_flag("--all-roots", all_roots,
                 "try every end-block as root, keep the smallest partition");
  part->add_option("--oracle-fallback-budget", fallback_budget,
                   "max order for the exhaustive fallback");

  auto* ver = app.add_subcommand("verify", "verify a partition against a graph");
  std::string part_file, kind = "file";
  ver->add_option("graph", input, "graph file, or - for stdin")->required();
  ver->add_option("partition", part_file, "partition file")->required();
  ver->add_option("--format", format, "graph input format")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  ver->add_option("--kind", kind, "override the partition kind")
      ->check(CLI::IsMember({"file", "2proper", "almost"}));

  auto* ora = app.add_subcommand("oracle", "exhaustive baselines");
  add_input(ora);
  std::string what = "all";
  bool ora_almost = false;
  ora->add_option("--what", what, "which oracle to run")
      ->check(CLI::IsMember({"all", "min2pp", "sigma-star", "alpha-star"}));
  ora->add_flag("--almost", ora_almost, "almost mode for min2pp");

  auto* gen = app.add_subcommand("gen", "generate graphs");
  gen->require_subcommand(1);
  gen->fallthrough();
  gen->add_option("--format", out_format, "output format")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  Graph generated(0);
  auto* g_k2 = gen->add_subcommand("k2", "the single edge");
  auto* g_f5 = gen->add_subcommand("f5", "the 5-vertex exception");
  std::string l_edges;
  auto* g_f11 = gen->add_subcommand("f11", "the 11-vertex family");
  g_f11->add_option("--L", l_edges, "optional edges, e.g. ab1,ab2");
  auto* g_f12 = gen->add_subcommand("f12", "the 12-vertex family");
  g_f12->add_option("--L", l_edges, "optional edges from ab1,ab2,ac9,b2c9");
  int h_s = 2, h_t = 2;
  bool h_minus = false;
  auto* g_h = gen->add_subcommand("h", "H(s,t) family");
  g_h->add_option("s", h_s)->required();
  g_h->add_option("t", h_t)->required();
  g_h->add_flag("--minus", h_minus, "drop the edge ab");
  int gn = 0, gb = 0;
  auto* g_complete = gen->add_subcommand("complete", "complete graph");
  g_complete->add_option("n", gn)->required();
  auto* g_cycle = gen->add_subcommand("cycle", "cycle");
  g_cycle->add_option("n", gn)->required();
  auto* g_path = gen->add_subcommand("path", "path");
  g_path->add_option("n", gn)->required();
  auto* g_bip = gen->add_subcommand("complete-bipartite", "K_{a,b}");
  g_bip->add_option("a", gn)->required();
  g_bip->add_option("b", gb)->required();
  double gp = 0.5;
  std::uint64_t gseed = 0;
  auto* g_rand = gen->add_subcommand("random", "seeded G(n,p)");
  g_rand->add_option("n", gn)->required();
  g_rand->add_option("p", gp)->required()->check(CLI::Range(0.0, 1.0));
  g_rand->add_option("seed", gseed)->required();
  std::vector<int> tvec;
  auto* g_sharp = gen->add_subcommand("sharp-gt", "cliques + singly joined hub");
  g_sharp->add_option("t", tvec, "clique orders")->required();
  auto* g_sharp_p =
      gen->add_subcommand("sharp-gt-prime", "cliques + fully joined hub");
  g_sharp_p->add_option("t", tvec, "clique orders")->required();

  auto* tc = app.add_subcommand("theorem-check", "batch statement checks");
  int ex_n = -1, tc_threads = 0;
  std::vector<std::string> rand_spec;
  bool allow_large = false;
  std::string which;
  tc->add_option("which", which, "ind|prop1|prop2|lemmas|corollary-pi|corollary-sigma|almost")
      ->required();
  tc->add_option("--exhaustive", ex_n, "all labeled graphs of this order");
  tc->add_option("--random", rand_spec, "count n p seed")->expected(4);
  tc->add_option("--threads", tc_threads, "worker count (0 = hardware)");
  tc->add_flag("--allow-large", allow_large, "permit --exhaustive 7");

  CLI11_PARSE(app, argc, argv);

  try {
    if (inv->parsed()) return cmd_invariants(input, format);
    if (part->parsed())
      return cmd_partition(input, format, almost, all_roots, fallback_budget);
    if (ver->parsed()) return cmd_verify(input, part_file, format, kind);
    if (ora->parsed()) return cmd_oracle(input, format, what, ora_almost);
    if (gen->parsed()) {
      if (g_k2->parsed()) generated = generate(ExceptionalClass::k2());
      else if (g_f5->parsed()) generated = generate(ExceptionalClass::f5());
      else if (g_f11->parsed()) generated = generate(f11_from_l(l_edges));
      else if (g_f12->parsed()) generated = generate(f12_from_l(l_edges));
      else if (g_h->parsed())
        generated = generate(ExceptionalClass::h(h_s, h_t, h_minus));
      else if (g_complete->parsed()) generated = gen_complete(gn);
      else if (g_cycle->parsed()) generated = gen_cycle(gn);
      else if (g_path->parsed()) generated = gen_path(gn);
      else if (g_bip->parsed()) generated = gen_complete_bipartite(gn, gb);
      else if (g_rand->parsed()) generated = gen_random(gn, gp, gseed);
      else if (g_sharp->parsed()) generated = gen_sharp_gt(SharpnessSpec{tvec});
      else if (g_sharp_p->parsed())
        generated = gen_sharp_gt_prime(SharpnessSpec{tvec});
      emit_graph(generated, out_format);
      return 0;
    }
    if (tc->parsed()) {
      auto ck = check_kind_from_name(which);
      if (!ck) throw std::runtime_error("unknown check: " + which);
      CorpusSpec corpus;
      if (ex_n >= 0 && !rand_spec.empty())
        throw std::runtime_error("choose one of --exhaustive / --random");
      if (ex_n >= 0) {
        if (ex_n > 7 || (ex_n == 7 && !allow_large))
          throw std::runtime_error(
              "exhaustive corpus too large (n = 7 needs --allow-large)");
        corpus.kind = CorpusSpec::Kind::Exhaustive;
        corpus.n = ex_n;
      } else if (!rand_spec.empty()) {
        corpus.kind = CorpusSpec::Kind::Random;
        corpus.count = std::stoll(rand_spec[0]);
        corpus.n = std::stoi(rand_spec[1]);
        corpus.p = std::stod(rand_spec[2]);
        corpus.seed = std::stoull(rand_spec[3]);
      } else {
        throw std::runtime_error("need --exhaustive n or --random count n p seed");
      }
      auto report = run_theorem_check(corpus, *ck, effective_budget(), tc_threads);
      std::cout << report.to_text();
      return report.violations.empty() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
