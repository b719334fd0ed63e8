#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "ppart/block_tree.hpp"
#include "ppart/generators.hpp"
#include "ppart/graph.hpp"
#include "test_util.hpp"

using namespace ppart;
using ppart::test::brute_biconnected;
using ppart::test::from_edges;

TEST_CASE("basic adjacency and degrees") {
  Graph g(4);
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 0);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 2);  // duplicate collapses
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 0);
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
  CHECK_THROWS_AS((void)g.degree(-1), std::out_of_range);
}

TEST_CASE("edges come out lexicographically") {
  Graph g = from_edges(4, {{2, 3}, {0, 3}, {0, 1}});
  std::vector<std::pair<int, int>> want{{0, 1}, {0, 3}, {2, 3}};
  CHECK(g.edges() == want);
}

TEST_CASE("induced subgraph keeps ids in order") {
  Graph g = gen_cycle(5);
  Graph sub = induced_subgraph(g, std::vector<int>{0, 1, 3});
  CHECK(sub.order() == 3);
  CHECK(sub.edge_count() == 1);  // only 0-1 survives
  CHECK(sub.adjacent(0, 1));
  std::vector<int> unsorted{1, 0}, repeated{0, 0};
  CHECK_THROWS_AS(induced_subgraph(g, unsorted), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(g, repeated), std::invalid_argument);
}

TEST_CASE("permuted relabels edges") {
  Graph g = from_edges(3, {{0, 1}});
  Graph h = permuted(g, std::vector<int>{2, 0, 1});  // old 0 -> 2, old 1 -> 0
  CHECK(h.adjacent(2, 0));
  CHECK(h.edge_count() == 1);
  std::vector<int> not_perm{0, 0, 1};
  CHECK_THROWS_AS(permuted(g, not_perm), std::invalid_argument);
}

TEST_CASE("components are sorted by smallest member") {
  Graph g = from_edges(6, {{4, 5}, {0, 2}});
  auto comps = components(g);
  REQUIRE(comps.size() == 4);
  CHECK(comps[0] == std::vector<int>{0, 2});
  CHECK(comps[1] == std::vector<int>{1});
  CHECK(comps[2] == std::vector<int>{3});
  CHECK(comps[3] == std::vector<int>{4, 5});
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(gen_path(4)));
  CHECK(is_connected(Graph(0)));
  CHECK(is_connected(Graph(1)));
}

TEST_CASE("biconnectivity matches the vertex-deletion oracle on all n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (long long mask = 0; mask < (1LL << pairs); ++mask) {
      Graph g(n);
      int bit = 0;
      for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++bit)
          if ((mask >> bit) & 1) g.add_edge(row, col);
      REQUIRE(is_biconnected(g) == brute_biconnected(g));
    }
  }
}

TEST_CASE("block decomposition of known shapes") {
  SUBCASE("single edge is one block, no cut vertices") {
    auto d = block_decomposition(gen_complete(2));
    CHECK(d.blocks.size() == 1);
    CHECK(d.blocks[0] == std::vector<int>{0, 1});
    CHECK(d.cut_vertices.empty());
  }
  SUBCASE("path on 4 vertices: three bridge blocks, two cut vertices") {
    auto d = block_decomposition(gen_path(4));
    CHECK(d.blocks.size() == 3);
    CHECK(d.cut_vertices == std::vector<int>{1, 2});
  }
  SUBCASE("two triangles sharing a vertex") {
    Graph g = from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto d = block_decomposition(g);
    REQUIRE(d.blocks.size() == 2);
    CHECK(d.cut_vertices == std::vector<int>{2});
    CHECK(d.is_cut_vertex(2));
    CHECK_FALSE(d.is_cut_vertex(0));
    std::vector<std::vector<int>> blocks = d.blocks;
    std::sort(blocks.begin(), blocks.end());
    CHECK(blocks[0] == std::vector<int>{0, 1, 2});
    CHECK(blocks[1] == std::vector<int>{2, 3, 4});
  }
  SUBCASE("isolated vertex becomes its own block") {
    Graph g = from_edges(3, {{0, 1}});
    auto d = block_decomposition(g);
    REQUIRE(d.blocks.size() == 2);
    std::vector<std::vector<int>> blocks = d.blocks;
    std::sort(blocks.begin(), blocks.end());
    CHECK(blocks[0] == std::vector<int>{0, 1});
    CHECK(blocks[1] == std::vector<int>{2});
  }
  SUBCASE("cycle is a single block") {
    auto d = block_decomposition(gen_cycle(6));
    CHECK(d.blocks.size() == 1);
    CHECK(d.cut_vertices.empty());
  }
}

TEST_CASE("block properties hold on random graphs") {
  SplitMix64 rng(20260822);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 1 + rng.next_int(12);
    Graph g = gen_random(n, 0.3, rng.next());
    auto d = block_decomposition(g);

    // every edge lies in exactly one block
    for (auto [u, v] : g.edges()) {
      int hits = 0;
      for (const auto& b : d.blocks)
        if (std::binary_search(b.begin(), b.end(), u) &&
            std::binary_search(b.begin(), b.end(), v))
          ++hits;
      REQUIRE(hits == 1);
    }
    // every vertex lies in >= 1 block; non-cut vertices in exactly one
    for (int v = 0; v < n; ++v) {
      size_t k = d.vertex_blocks[v].size();
      REQUIRE(k >= 1);
      if (!d.is_cut_vertex(v)) REQUIRE(k == 1);
      if (d.is_cut_vertex(v)) REQUIRE(k >= 2);
    }
    // blocks of order >= 3 are biconnected subgraphs
    for (const auto& b : d.blocks)
      if (b.size() >= 3) REQUIRE(brute_biconnected(induced_subgraph(g, b)));
    // cut vertices match the deletion oracle
    for (int v = 0; v < n; ++v) {
      std::vector<int> keep;
      for (int u = 0; u < n; ++u)
        if (u != v) keep.push_back(u);
      size_t before = components(g).size();
      size_t after = components(induced_subgraph(g, keep)).size();
      bool oracle_cut = g.degree(v) > 0 && after > before;
      REQUIRE(d.is_cut_vertex(v) == oracle_cut);
    }
  }
}

TEST_CASE("end blocks and rooting") {
  // caterpillar: triangle - 2 - triangle - 4 - triangle
  Graph g = from_edges(7, {{0, 1}, {0, 2}, {1, 2},
                           {2, 3}, {2, 4}, {3, 4},
                           {4, 5}, {4, 6}, {5, 6}});
  auto d = block_decomposition(g);
  REQUIRE(d.blocks.size() == 3);
  auto ends = end_blocks(d);
  CHECK(ends.size() == 2);

  auto t = root_block_tree(g);
  // root is the end-block containing vertex 0
  CHECK(std::binary_search(t.decomp.blocks[t.root].begin(),
                           t.decomp.blocks[t.root].end(), 0));
  CHECK(t.parent_cut[t.root] == -1);
  // the non-root blocks hang off cut vertices 2 and 4
  int with_parent = 0;
  for (size_t b = 0; b < t.decomp.blocks.size(); ++b)
    if (static_cast<int>(b) != t.root && t.parent_cut[b] != -1) ++with_parent;
  CHECK(with_parent == 2);

  // X of the middle block is {3}: 2 and 4 are cut vertices
  for (size_t b = 0; b < t.decomp.blocks.size(); ++b) {
    const auto& blk = t.decomp.blocks[b];
    if (std::binary_search(blk.begin(), blk.end(), 3)) {
      CHECK(t.x_set[b] == std::vector<int>{3});
    }
  }
  CHECK_THROWS_AS(root_block_tree(gen_cycle(4)), std::invalid_argument);
}
