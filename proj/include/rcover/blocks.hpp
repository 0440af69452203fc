#ifndef RCOVER_BLOCKS_HPP
#define RCOVER_BLOCKS_HPP

#include <algorithm>
#include <functional>
#include <queue>
#include <vector>

#include "rcover/graph.hpp"

namespace rcover {

enum class BlockKind { biconnected, bridge, loop, pendant, half_edge };

inline const char* to_string(BlockKind k) {
  switch (k) {
    case BlockKind::biconnected: return "biconnected";
    case BlockKind::bridge: return "bridge";
    case BlockKind::loop: return "loop";
    case BlockKind::pendant: return "pendant";
    case BlockKind::half_edge: return "half-edge";
  }
  return "?";
}

struct Block {
  BlockKind kind;
  std::vector<int> vertices;  // sorted
  std::vector<int> edges;     // edge ids, sorted

  // Loops are handled like pendant edges once they hang off a vertex.
  bool is_leaf_edge() const {
    return kind == BlockKind::pendant || kind == BlockKind::half_edge || kind == BlockKind::loop;
  }
};

// Incidence tree of blocks and articulations. Tree nodes 0..B-1 are blocks,
// nodes B.. are articulations (articulations[i] is node B+i).
struct BlockTree {
  std::vector<Block> blocks;
  std::vector<int> articulations;
  std::vector<std::vector<int>> adj;
  std::vector<int> node_of_vertex;  // articulation node per vertex or -1
  int center = -1;                  // tree node
  std::vector<int> parent;          // rooted at center; -1 at the center

  int num_blocks() const { return static_cast<int>(blocks.size()); }
  bool is_block_node(int x) const { return x < num_blocks(); }
  bool central_block() const { return center >= 0 && is_block_node(center); }
  int articulation_vertex(int x) const { return articulations[x - num_blocks()]; }

  std::vector<int> children(int x) const {
    std::vector<int> out;
    for (int y : adj[x])
      if (parent[y] == x) out.push_back(y);
    return out;
  }

  // Tree nodes of the subtree rooted at x, x included.
  std::vector<int> subtree(int x) const {
    std::vector<int> out{x};
    for (std::size_t i = 0; i < out.size(); ++i)
      for (int c : children(out[i])) out.push_back(c);
    return out;
  }

  // Union of the blocks in the subtree rooted at node x.
  SubgraphRef subgraph(int x) const {
    SubgraphRef s;
    for (int y : subtree(x)) {
      if (!is_block_node(y)) continue;
      s.vertices.insert(s.vertices.end(), blocks[y].vertices.begin(), blocks[y].vertices.end());
      s.edges.insert(s.edges.end(), blocks[y].edges.begin(), blocks[y].edges.end());
    }
    if (!is_block_node(x)) s.vertices.push_back(articulation_vertex(x));
    std::sort(s.vertices.begin(), s.vertices.end());
    s.vertices.erase(std::unique(s.vertices.begin(), s.vertices.end()), s.vertices.end());
    std::sort(s.edges.begin(), s.edges.end());
    return s;
  }
};

inline BlockTree block_tree(const Graph& g) {
  if (!is_connected(g)) throw InputError("block tree: graph is disconnected");
  BlockTree bt;
  const int n = g.num_vertices();
  auto at = g.darts_at();

  // Biconnected components of the standard edges (lowpoint DFS).
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> stack;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int via) {
    disc[v] = low[v] = timer++;
    for (int h : at[v]) {
      if (g.kind(h) != EdgeKind::standard) continue;
      int e = g.edge_of(h);
      if (e == via) continue;
      int w = g.vert[g.mate[h]];
      if (disc[w] < 0) {
        stack.push_back(e);
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          Block b;
          while (true) {
            int f = stack.back();
            stack.pop_back();
            b.edges.push_back(f);
            if (f == e) break;
          }
          b.kind = b.edges.size() == 1 ? BlockKind::bridge : BlockKind::biconnected;
          for (int f : b.edges) {
            b.vertices.push_back(g.vert[f]);
            b.vertices.push_back(g.vert[g.mate[f]]);
          }
          bt.blocks.push_back(std::move(b));
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, -1);
  for (int e : g.edge_ids()) {
    Block b;
    switch (g.kind(e)) {
      case EdgeKind::loop: b.kind = BlockKind::loop; break;
      case EdgeKind::pendant: b.kind = BlockKind::pendant; break;
      case EdgeKind::half_edge: b.kind = BlockKind::half_edge; break;
      default: continue;
    }
    b.edges.push_back(e);
    b.vertices.push_back(g.vert[e] >= 0 ? g.vert[e] : g.vert[g.mate[e]]);
    bt.blocks.push_back(std::move(b));
  }
  for (auto& b : bt.blocks) {
    std::sort(b.vertices.begin(), b.vertices.end());
    b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
    std::sort(b.edges.begin(), b.edges.end());
  }
  std::sort(bt.blocks.begin(), bt.blocks.end(),
            [](const Block& a, const Block& b) { return a.edges < b.edges; });

  std::vector<std::vector<int>> blocks_at(n);
  for (int i = 0; i < bt.num_blocks(); ++i)
    for (int v : bt.blocks[i].vertices) blocks_at[v].push_back(i);
  // A single vertex carrying only leaf edges counts as a central articulation.
  bool lone_vertex =
      n == 1 && std::all_of(bt.blocks.begin(), bt.blocks.end(), [](const Block& b) {
        return b.kind == BlockKind::pendant || b.kind == BlockKind::half_edge;
      });
  bt.node_of_vertex.assign(n, -1);
  for (int v = 0; v < n; ++v)
    if (blocks_at[v].size() >= 2 || lone_vertex) {
      bt.node_of_vertex[v] = bt.num_blocks() + static_cast<int>(bt.articulations.size());
      bt.articulations.push_back(v);
    }
  const int nodes = bt.num_blocks() + static_cast<int>(bt.articulations.size());
  bt.adj.assign(nodes, {});
  for (std::size_t i = 0; i < bt.articulations.size(); ++i) {
    int x = bt.num_blocks() + static_cast<int>(i);
    for (int b : blocks_at[bt.articulations[i]]) {
      bt.adj[x].push_back(b);
      bt.adj[b].push_back(x);
    }
  }

  if (lone_vertex) {
    bt.center = bt.num_blocks();
  } else {
    auto bfs = [&](int s, std::vector<int>& dist, std::vector<int>& par) {
      dist.assign(nodes, -1);
      par.assign(nodes, -1);
      std::queue<int> q;
      q.push(s);
      dist[s] = 0;
      int last = s;
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        last = x;
        for (int y : bt.adj[x])
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            par[y] = x;
            q.push(y);
          }
      }
      return last;
    };
    std::vector<int> dist, par;
    int a = bfs(0, dist, par);
    int b = bfs(a, dist, par);
    std::vector<int> path{b};
    while (path.back() != a) path.push_back(par[path.back()]);
    bt.center = path[path.size() / 2];
  }
  bt.parent.assign(nodes, -1);
  std::vector<char> seen(nodes, 0);
  std::queue<int> q;
  q.push(bt.center);
  seen[bt.center] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : bt.adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        bt.parent[y] = x;
        q.push(y);
      }
  }
  return bt;
}

struct CentralElement {
  bool is_block;
  int block = -1;        // block index when is_block
  int articulation = -1; // vertex when !is_block
};

inline CentralElement central_element(const BlockTree& bt) {
  if (bt.central_block()) return {true, bt.center, -1};
  return {false, -1, bt.articulation_vertex(bt.center)};
}

// G_u for an articulation u lying on the central block.
inline SubgraphRef attached_subgraph(const BlockTree& bt, int u) {
  if (!bt.central_block()) throw InputError("attached subgraph: graph has no central block");
  if (u < 0 || u >= static_cast<int>(bt.node_of_vertex.size()) || bt.node_of_vertex[u] < 0)
    throw InputError("attached subgraph: vertex is not an articulation");
  int x = bt.node_of_vertex[u];
  if (bt.parent[x] != bt.center) throw InputError("attached subgraph: articulation is not on the central block");
  return bt.subgraph(x);
}

}  // namespace rcover

#endif  // RCOVER_BLOCKS_HPP
