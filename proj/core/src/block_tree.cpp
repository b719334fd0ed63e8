#include "ppart/block_tree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ppart {

bool BlockDecomposition::is_cut_vertex(int v) const {
  return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.order();
  BlockDecomposition out;
  out.vertex_blocks.resize(n);

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> cut(n, false);
  std::vector<std::pair<int, int>> edge_stack;
  int timer = 0;

  auto pop_block = [&](int u, int v) {
    // pop edges up to and including (u, v); their endpoints form one block
    std::vector<int> verts;
    for (;;) {
      auto [a, b] = edge_stack.back();
      edge_stack.pop_back();
      verts.push_back(a);
      verts.push_back(b);
      if (a == u && b == v) break;
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    int id = out.block_count();
    for (int x : verts) out.vertex_blocks[x].push_back(id);
    out.blocks.push_back(std::move(verts));
  };

  std::function<void(int, int)> visit = [&](int u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (int v : g.neighbors(u)) {
      if (v == parent) {
        parent = -1;  // skip the tree edge once; simple graph, no multiedges
        continue;
      }
      if (disc[v] == -1) {
        ++children;
        edge_stack.emplace_back(u, v);
        visit(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          pop_block(u, v);
          if (disc[u] > 0) cut[u] = true;  // non-root: separates v's subtree
        }
      } else if (disc[v] < disc[u]) {
        edge_stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
    if (disc[u] == 0 && children >= 2) cut[u] = true;  // component root
  };

  for (int s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    timer = 0;  // per component, so the root-cut test disc[u] == 0 works
    if (g.degree(s) == 0) {
      disc[s] = 0;
      out.vertex_blocks[s].push_back(out.block_count());
      out.blocks.push_back({s});
      continue;
    }
    visit(s, -2);
  }

  for (int v = 0; v < n; ++v)
    if (cut[v]) out.cut_vertices.push_back(v);
  return out;
}

std::vector<int> end_blocks(const BlockDecomposition& decomp) {
  std::vector<int> out;
  for (int b = 0; b < decomp.block_count(); ++b) {
    int cuts = 0;
    for (int v : decomp.blocks[b])
      if (decomp.is_cut_vertex(v)) ++cuts;
    if (cuts == 1) out.push_back(b);
  }
  return out;
}

namespace {

// Block of sub (= B - u_B) covering all of x_set, mapped back to g's ids.
// Largest block wins; ties break to the smallest minimum id.
std::optional<std::vector<int>> find_carrier(const std::vector<int>& sub_verts,
                                             const std::vector<int>& x_set,
                                             const Graph& g) {
  Graph sub = induced_subgraph(g, sub_verts);
  BlockDecomposition d = block_decomposition(sub);
  std::optional<std::vector<int>> best;
  for (const auto& local : d.blocks) {
    std::vector<int> verts;
    verts.reserve(local.size());
    for (int i : local) verts.push_back(sub_verts[i]);
    if (!std::includes(verts.begin(), verts.end(), x_set.begin(), x_set.end()))
      continue;
    if (!best || verts.size() > best->size() ||
        (verts.size() == best->size() && verts.front() < best->front()))
      best = std::move(verts);
  }
  return best;
}

}  // namespace

RootedBlockTree root_block_tree(const Graph& g, int root_block) {
  if (!is_connected(g))
    throw std::invalid_argument("root_block_tree wants a connected graph");

  RootedBlockTree t;
  t.decomp = block_decomposition(g);
  const int nb = t.decomp.block_count();
  if (nb < 2)
    throw std::invalid_argument("root_block_tree wants at least two blocks");
  {
    auto ends = end_blocks(t.decomp);
    if (std::find(ends.begin(), ends.end(), root_block) == ends.end())
      throw std::invalid_argument("root must be an end-block");
  }

  t.root = root_block;
  t.parent_cut.assign(nb, -1);
  t.x_set.resize(nb);
  t.carrier.resize(nb);
  t.child_cuts.resize(nb);
  t.cut_children.resize(g.order());
  t.subtree_vertices.resize(nb);
  t.subtree_x_blocks.assign(nb, 0);

  for (int b = 0; b < nb; ++b)
    for (int v : t.decomp.blocks[b])
      if (!t.decomp.is_cut_vertex(v)) t.x_set[b].push_back(v);

  // BFS over the block/cut tree from the root.
  std::vector<bool> seen_block(nb, false);
  seen_block[root_block] = true;
  t.bfs_order.push_back(root_block);
  for (size_t i = 0; i < t.bfs_order.size(); ++i) {
    int b = t.bfs_order[i];
    for (int v : t.decomp.blocks[b]) {
      if (!t.decomp.is_cut_vertex(v) || v == t.parent_cut[b]) continue;
      t.child_cuts[b].push_back(v);
      for (int c : t.decomp.vertex_blocks[v]) {
        if (seen_block[c]) continue;
        seen_block[c] = true;
        t.parent_cut[c] = v;
        t.cut_children[v].push_back(c);
        t.bfs_order.push_back(c);
      }
    }
  }

  for (int b = 0; b < nb; ++b) {
    if (b == t.root || t.x_set[b].empty()) continue;
    std::vector<int> rest;
    for (int v : t.decomp.blocks[b])
      if (v != t.parent_cut[b]) rest.push_back(v);
    t.carrier[b] = find_carrier(rest, t.x_set[b], g);
  }

  // subtree accumulation in reverse BFS order (children before parents)
  for (auto it = t.bfs_order.rbegin(); it != t.bfs_order.rend(); ++it) {
    int b = *it;
    std::vector<int> verts = t.decomp.blocks[b];
    int xb = t.x_set[b].empty() ? 0 : 1;
    for (int x : t.child_cuts[b])
      for (int c : t.cut_children[x]) {
        verts.insert(verts.end(), t.subtree_vertices[c].begin(),
                     t.subtree_vertices[c].end());
        xb += t.subtree_x_blocks[c];
      }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    t.subtree_vertices[b] = std::move(verts);
    t.subtree_x_blocks[b] = xb;
  }
  return t;
}

RootedBlockTree root_block_tree(const Graph& g) {
  BlockDecomposition d = block_decomposition(g);
  auto ends = end_blocks(d);
  if (ends.empty())
    throw std::invalid_argument("graph has no end-block to root at");
  int best = ends.front();
  for (int b : ends)
    if (d.blocks[b].front() < d.blocks[best].front()) best = b;
  return root_block_tree(g, best);
}

}  // namespace ppart
