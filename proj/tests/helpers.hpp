#ifndef RCOVER_TESTS_HELPERS_HPP
#define RCOVER_TESTS_HELPERS_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "rcover/families.hpp"
#include "rcover/graph.hpp"

namespace testing_util {

using rcover::Graph;

// Random renumbering of vertices and darts; names travel with their items.
inline Graph relabel(const Graph& g, std::mt19937_64& rng, std::vector<int>* dart_perm = nullptr) {
  std::vector<int> vp(g.num_vertices()), dp(g.num_darts());
  std::iota(vp.begin(), vp.end(), 0);
  std::iota(dp.begin(), dp.end(), 0);
  std::shuffle(vp.begin(), vp.end(), rng);
  std::shuffle(dp.begin(), dp.end(), rng);
  Graph out;
  out.vertex_names.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) out.vertex_names[vp[v]] = g.vertex_names[v];
  const int n = g.num_darts();
  out.mate.resize(n);
  out.vert.resize(n);
  out.type.resize(n);
  out.color.resize(n);
  out.dir.resize(n);
  out.edge_names.resize(n);
  for (int h = 0; h < n; ++h) {
    int x = dp[h];
    out.mate[x] = dp[g.mate[h]];
    out.vert[x] = g.vert[h] >= 0 ? vp[g.vert[h]] : -1;
    out.type[x] = g.type[h];
    out.color[x] = g.color[h];
    out.dir[x] = g.dir[h];
    out.edge_names[x] = g.edge_names[h];
  }
  if (dart_perm) *dart_perm = dp;
  return out;
}

// Random graphs for property suites, normalized. A mix of plain, colored,
// halvable and directed instances.
inline Graph random_instance(std::mt19937_64& rng, int max_vertices = 8) {
  rcover::families::RandomParams p;
  p.max_vertices = max_vertices;
  std::uniform_int_distribution<int> mode(0, 3);
  switch (mode(rng)) {
    case 0: break;
    case 1: p.colors = 2; break;
    case 2: p.halvable_rate = 0.7; break;
    case 3: p.directed_rate = 0.2; p.colors = 2; break;
  }
  return rcover::normalize(rcover::families::random_connected(rng, p));
}

// Z_k-voltage lift of a small random base graph, so that the result has a
// semiregular automorphism of order k. Retries until connected.
inline Graph random_lift(std::mt19937_64& rng, int k, int base_vertices = 3) {
  rcover::families::RandomParams p;
  p.min_vertices = 1;
  p.max_vertices = base_vertices;
  p.pendant_rate = 0.3;
  p.loop_rate = 0.3;
  p.parallel_rate = 0.2;
  p.colors = 2;
  std::uniform_int_distribution<int> volt(0, k - 1);
  while (true) {
    Graph b = rcover::families::random_connected(rng, p);
    Graph g;
    for (int i = 0; i < k * b.num_vertices(); ++i) g.add_vertex();
    auto id = [&](int v, int i) { return v * k + ((i % k) + k) % k; };
    for (int e : b.edge_ids()) {
      int m = b.mate[e];
      int a = volt(rng);
      for (int i = 0; i < k; ++i) {
        if (b.vert[m] < 0) {
          g.add_pendant(id(b.vert[e], i), b.color[e]);
        } else {
          int h = g.add_edge(id(b.vert[e], i), id(b.vert[m], i + a), b.type[e], b.color[e]);
          g.dir[h] = b.dir[e];
          g.dir[h + 1] = b.dir[m];
        }
      }
    }
    if (rcover::is_connected(g)) return rcover::normalize(g);
  }
}

}  // namespace testing_util

#endif  // RCOVER_TESTS_HELPERS_HPP
