#ifndef PPART_BLOCK_TREE_HPP
#define PPART_BLOCK_TREE_HPP

#include <optional>
#include <vector>

#include "ppart/graph.hpp"

namespace ppart {

// Blocks (maximal subgraphs without a cut vertex of their own) and the cut
// vertices joining them.  An isolated vertex forms a single-vertex block.
// Block ids follow the DFS discovery order, which is deterministic: roots and
// neighbors are visited in increasing vertex order.
struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;        // sorted vertex lists
  std::vector<int> cut_vertices;               // sorted
  std::vector<std::vector<int>> vertex_blocks; // per vertex: block ids, sorted

  int block_count() const { return static_cast<int>(blocks.size()); }
  bool is_cut_vertex(int v) const;
};

BlockDecomposition block_decomposition(const Graph& g);

// Blocks containing exactly one cut vertex of g, i.e. the leaves of the
// block/cut-vertex tree of a component that has at least two blocks.
std::vector<int> end_blocks(const BlockDecomposition& decomp);

// Block/cut-vertex tree of a connected, non-2-connected graph, rooted at an
// end-block.  For each block B:
//   - parent_cut (u_B): the cut vertex between B and its parent; -1 at root;
//   - x_set (X_B): vertices of B that are not cut vertices of g;
//   - carrier (A_B): for a non-root block with X_B nonempty, the block of
//     B - u_B that contains all of X_B (largest one on ties, then smallest
//     minimum id); nullopt at the root, when X_B is empty, or when no single
//     block of B - u_B covers X_B;
//   - child_cuts: cut vertices of B other than u_B (each owns child blocks);
//   - subtree_vertices: vertices of B and all its descendants;
//   - subtree_x_blocks: number of descendant-or-self blocks with X nonempty.
struct RootedBlockTree {
  BlockDecomposition decomp;
  int root = -1;
  std::vector<int> parent_cut;
  std::vector<std::vector<int>> x_set;
  std::vector<std::optional<std::vector<int>>> carrier;
  std::vector<std::vector<int>> child_cuts;
  std::vector<std::vector<int>> cut_children;  // indexed by vertex id
  std::vector<std::vector<int>> subtree_vertices;
  std::vector<int> subtree_x_blocks;
  std::vector<int> bfs_order;  // root first; reverse = post-order
};

RootedBlockTree root_block_tree(const Graph& g, int root_block);

// Default root: among end-blocks, the one containing the smallest vertex id
// (ties broken by block id).
RootedBlockTree root_block_tree(const Graph& g);

}  // namespace ppart

#endif
