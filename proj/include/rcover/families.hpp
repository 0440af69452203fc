#ifndef RCOVER_FAMILIES_HPP
#define RCOVER_FAMILIES_HPP

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rcover/graph.hpp"

namespace rcover::families {

// C_n: n = 1 is a loop, n = 2 a pair of parallel edges.
inline Graph cycle(int n, EdgeType t = EdgeType::undirected, int color = 0) {
  if (n < 1) throw InputError("cycle: n must be positive");
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, t, color);
  return g;
}

inline Graph path(int n, EdgeType t = EdgeType::undirected) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, t);
  return g;
}

inline Graph complete(int n, EdgeType t = EdgeType::undirected) {
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j, t);
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  Graph g;
  for (int i = 0; i < a + b; ++i) g.add_vertex();
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

inline Graph cube() {
  Graph g;
  for (int i = 0; i < 8; ++i) g.add_vertex();
  for (int i = 0; i < 8; ++i)
    for (int b = 1; b < 8; b <<= 1)
      if (i < (i ^ b)) g.add_edge(i, i ^ b);
  return g;
}

inline Graph prism(int n) {
  Graph g;
  for (int i = 0; i < 2 * n; ++i) g.add_vertex();
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(n + i, n + (i + 1) % n);
    g.add_edge(i, n + i);
  }
  return g;
}

inline Graph wheel(int n) {
  Graph g = cycle(n);
  int hub = g.add_vertex();
  for (int i = 0; i < n; ++i) g.add_edge(hub, i);
  return g;
}

inline Graph petersen() {
  Graph g;
  for (int i = 0; i < 10; ++i) g.add_vertex();
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, 5 + i);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

// Two branch vertices 0 and 1 joined by internally disjoint paths; paths[i]
// is the number of internal vertices of path i.
inline Graph theta(const std::vector<int>& paths, EdgeType t = EdgeType::undirected) {
  Graph g;
  g.add_vertex();
  g.add_vertex();
  for (int k : paths) {
    int prev = 0;
    for (int j = 0; j < k; ++j) {
      int x = g.add_vertex();
      g.add_edge(prev, x, t);
      prev = x;
    }
    g.add_edge(prev, 1, t);
  }
  return g;
}

// Two vertices joined by one edge per entry of colors.
inline Graph dipole(const std::vector<int>& colors, EdgeType t = EdgeType::undirected) {
  Graph g;
  g.add_vertex();
  g.add_vertex();
  for (int c : colors) g.add_edge(0, 1, t, c);
  return g;
}

inline Graph star(int k) {
  Graph g;
  g.add_vertex();
  for (int i = 0; i < k; ++i) g.add_edge(0, g.add_vertex());
  return g;
}

inline Graph with_pendants(Graph g, const std::vector<std::pair<int, int>>& at, int color = 0) {
  for (auto [v, k] : at)
    for (int i = 0; i < k; ++i) g.add_pendant(v, color);
  return g;
}

// Every non-directed edge made halvable.
inline Graph halvable(Graph g) {
  for (int h = 0; h < g.num_darts(); ++h)
    if (g.type[h] == EdgeType::undirected) g.type[h] = EdgeType::halvable;
  return g;
}

// Disjoint union of a and b with va in a identified with vb in b.
inline Graph glue_at_vertex(const Graph& a, int va, const Graph& b, int vb) {
  Graph g;
  for (int x = 0; x < a.num_vertices(); ++x) g.add_vertex();
  std::vector<int> map(b.num_vertices(), -1);
  for (int x = 0; x < b.num_vertices(); ++x) map[x] = x == vb ? va : g.add_vertex();
  auto copy = [&](const Graph& s, auto vmap) {
    for (int e : s.edge_ids()) {
      int m = s.mate[e];
      auto mv = [&](int h) { return s.vert[h] >= 0 ? vmap(s.vert[h]) : -1; };
      if (m == e) {
        g.add_half_edge(mv(e), s.color[e]);
        continue;
      }
      int h = g.add_edge(mv(e), mv(m), s.type[e], s.color[e]);
      g.dir[h] = s.dir[e];
      g.dir[h + 1] = s.dir[m];
    }
  };
  copy(a, [](int x) { return x; });
  copy(b, [&](int x) { return map[x]; });
  return g;
}

// Cycle v0..v7 decorated with dipoles, K4-minus-an-edge atoms and pendant stars.
// Dipoles (two black and two white parallel edges) sit on v0v1, v2v3, v4v5,
// v6v7; the K4 - e atoms on v1v2, v3v4, v5v6, v7v0, oriented by which
// boundary vertex carries the red edges; four pendant edges hang at v0, v1,
// v4, v5.
inline Graph eight_cycle_example() {
  Graph g;
  for (int i = 0; i < 8; ++i) g.add_vertex();
  for (int i = 0; i < 8; i += 2)
    for (int c : {1, 1, 2, 2}) g.add_edge(i, i + 1, EdgeType::undirected, c);
  const std::pair<int, int> k4e[] = {{1, 2}, {4, 3}, {5, 6}, {0, 7}};
  for (auto [u, v] : k4e) {
    int x = g.add_vertex(), y = g.add_vertex();
    g.add_edge(u, x, EdgeType::undirected, 3);
    g.add_edge(u, y, EdgeType::undirected, 3);
    g.add_edge(v, x, EdgeType::undirected, 4);
    g.add_edge(v, y, EdgeType::undirected, 4);
    g.add_edge(x, y);
  }
  for (int v : {0, 1, 4, 5})
    for (int i = 0; i < 4; ++i) g.add_pendant(v);
  return g;
}

struct RandomParams {
  int min_vertices = 2;
  int max_vertices = 8;
  double extra_edge_rate = 0.6;  // extra edges per vertex on top of a spanning tree
  double parallel_rate = 0.15;
  double loop_rate = 0.05;
  double pendant_rate = 0.2;
  double halvable_rate = 0.0;
  double directed_rate = 0.0;
  int colors = 1;
};

// Connected random graph; not normalized.
inline Graph random_connected(std::mt19937_64& rng, const RandomParams& p = {}) {
  std::uniform_int_distribution<int> nd(p.min_vertices, p.max_vertices);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_int_distribution<int> cd(0, std::max(0, p.colors - 1));
  const int n = nd(rng);
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  auto pick_type = [&] {
    double r = u01(rng);
    if (r < p.directed_rate) return EdgeType::directed;
    if (r < p.directed_rate + p.halvable_rate) return EdgeType::halvable;
    return EdgeType::undirected;
  };
  auto add = [&](int a, int b) {
    EdgeType t = pick_type();
    int c = cd(rng);
    g.add_edge(a, b, t, c);
    if (u01(rng) < p.parallel_rate) g.add_edge(a, b, t, c);
  };
  for (int i = 1; i < n; ++i) add(std::uniform_int_distribution<int>(0, i - 1)(rng), i);
  int extra = static_cast<int>(p.extra_edge_rate * n + 0.5);
  std::uniform_int_distribution<int> vd(0, n - 1);
  for (int i = 0; i < extra; ++i) {
    int a = vd(rng), b = vd(rng);
    if (a != b) add(a, b);
  }
  for (int v = 0; v < n; ++v) {
    if (u01(rng) < p.loop_rate) g.add_loop(v, pick_type(), cd(rng));
    if (u01(rng) < p.pendant_rate) g.add_pendant(v, cd(rng));
  }
  return g;
}

}  // namespace rcover::families

#endif  // RCOVER_FAMILIES_HPP
