#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "rcover/blocks.hpp"
#include "rcover/families.hpp"
#include "rcover/groups.hpp"
#include "rcover/iso.hpp"

using namespace rcover;
namespace F = rcover::families;

namespace {

Graph triangle_chain() {
  Graph a = F::glue_at_vertex(F::cycle(3), 2, F::cycle(3), 0);  // vertices 0..4, shared vertex 2
  return F::glue_at_vertex(a, 3, F::cycle(3), 0);               // second triangle is 2,3,4
}

// Standard-edge connectivity after deleting vertex x.
bool disconnects(const Graph& g, int x) {
  const int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  int count = 0;
  auto at = g.darts_at();
  for (int s = 0; s < n; ++s) {
    if (s == x || comp[s] >= 0) continue;
    std::vector<int> st{s};
    comp[s] = count;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int h : at[v]) {
        if (g.kind(h) != EdgeKind::standard) continue;
        int w = g.vert[g.mate[h]];
        if (w != x && comp[w] < 0) comp[w] = count, st.push_back(w);
      }
    }
    ++count;
  }
  return count > 1;
}

}  // namespace

TEST(BlockTree, BiconnectedIsSingleCentralBlock) {
  for (const Graph& g : {F::cube(), F::complete(4), F::cycle(5)}) {
    BlockTree bt = block_tree(g);
    ASSERT_EQ(bt.num_blocks(), 1);
    EXPECT_TRUE(bt.central_block());
    EXPECT_TRUE(central_element(bt).is_block);
  }
}

TEST(BlockTree, BowtieHasCentralArticulation) {
  Graph g = F::glue_at_vertex(F::cycle(3), 0, F::cycle(3), 0);
  BlockTree bt = block_tree(g);
  EXPECT_EQ(bt.num_blocks(), 2);
  ASSERT_EQ(bt.articulations.size(), 1u);
  auto c = central_element(bt);
  EXPECT_FALSE(c.is_block);
  EXPECT_EQ(c.articulation, 0);
}

TEST(BlockTree, TriangleChainCenterIsMiddleTriangle) {
  Graph g = triangle_chain();
  BlockTree bt = block_tree(g);
  EXPECT_EQ(bt.num_blocks(), 3);
  ASSERT_TRUE(bt.central_block());
  // The middle triangle holds both articulations.
  const Block& b = bt.blocks[bt.center];
  int arts = 0;
  for (int v : b.vertices) arts += bt.node_of_vertex[v] >= 0;
  EXPECT_EQ(arts, 2);
}

TEST(BlockTree, K4WithTriangleAtOneVertex) {
  Graph g = F::glue_at_vertex(F::complete(4), 0, F::cycle(3), 0);
  auto c = central_element(block_tree(g));
  EXPECT_FALSE(c.is_block);
  EXPECT_EQ(c.articulation, 0);
}

TEST(BlockTree, LeafBlocks) {
  Graph g = F::with_pendants(F::cycle(4), {{0, 1}, {2, 1}});
  g.add_loop(1);
  g.add_half_edge(3);
  BlockTree bt = block_tree(g);
  std::map<BlockKind, int> kinds;
  for (const auto& b : bt.blocks) kinds[b.kind]++;
  EXPECT_EQ(kinds[BlockKind::biconnected], 1);
  EXPECT_EQ(kinds[BlockKind::pendant], 2);
  EXPECT_EQ(kinds[BlockKind::loop], 1);
  EXPECT_EQ(kinds[BlockKind::half_edge], 1);
  EXPECT_TRUE(bt.central_block());
}

TEST(BlockTree, LoneVertexIsCentralArticulation) {
  Graph g = normalize(F::star(3));
  auto c = central_element(block_tree(g));
  EXPECT_FALSE(c.is_block);
  EXPECT_EQ(c.articulation, 0);
}

TEST(BlockTree, DisconnectedThrows) {
  Graph g = F::cycle(3);
  g.add_vertex();
  EXPECT_THROW(block_tree(g), InputError);
}

TEST(AttachedSubgraph, NoArticulationOnCube) {
  BlockTree bt = block_tree(F::cube());
  EXPECT_THROW(attached_subgraph(bt, 0), InputError);
}

TEST(AttachedSubgraph, PendantEdge) {
  // A pendant at each of two opposite vertices keeps the 4-cycle central.
  Graph g = F::with_pendants(F::cycle(4), {{0, 1}, {2, 1}});
  BlockTree bt = block_tree(g);
  SubgraphRef s = attached_subgraph(bt, 0);
  ASSERT_EQ(s.edges.size(), 1u);
  EXPECT_EQ(g.kind(s.edges[0]), EdgeKind::pendant);
  EXPECT_EQ(s.vertices, std::vector<int>{0});
}

TEST(AttachedSubgraph, Triangle) {
  Graph g = F::glue_at_vertex(F::glue_at_vertex(F::cycle(4), 0, F::cycle(3), 0), 2, F::cycle(3), 0);
  BlockTree bt = block_tree(g);
  ASSERT_TRUE(bt.central_block());
  SubgraphRef s = attached_subgraph(bt, 0);
  EXPECT_EQ(s.edges.size(), 3u);
  EXPECT_EQ(s.vertices.size(), 3u);
  EXPECT_THROW(attached_subgraph(bt, 1), InputError);
}

TEST(BlockTreeProperties, PartitionAndArticulations) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    Graph g = testing_util::random_instance(rng, 9);
    BlockTree bt = block_tree(g);
    std::vector<int> owner(g.num_darts(), 0);
    for (const auto& b : bt.blocks)
      for (int e : b.edges) owner[e]++;
    for (int e : g.edge_ids()) EXPECT_EQ(owner[e], 1);
    for (int v = 0; v < g.num_vertices(); ++v) {
      int nonleaf = 0;
      for (const auto& b : bt.blocks)
        if ((b.kind == BlockKind::biconnected || b.kind == BlockKind::bridge) &&
            std::binary_search(b.vertices.begin(), b.vertices.end(), v))
          ++nonleaf;
      EXPECT_EQ(nonleaf >= 2, disconnects(g, v));
    }
    for (int a : bt.articulations) {
      int in = 0;
      for (const auto& b : bt.blocks) in += std::binary_search(b.vertices.begin(), b.vertices.end(), a);
      EXPECT_TRUE(in >= 2 || g.num_vertices() == 1);
    }
  }
}

TEST(BlockTreeProperties, SemiregularImpliesCentralBlockAndIsomorphicBranches) {
  std::mt19937_64 rng(42);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    Graph g = testing_util::random_lift(rng, 2 + i % 3, 3);
    if (automorphism_count(g) > 3000) continue;
    auto subs = semiregular_subgroups(g);
    if (subs.size() < 2) continue;
    BlockTree bt = block_tree(g);
    ASSERT_TRUE(bt.central_block());
    ++checked;
    for (const auto& grp : subs) {
      for (int u : bt.blocks[bt.center].vertices) {
        if (bt.node_of_vertex[u] < 0) continue;
        SubgraphRef gu = attached_subgraph(bt, u);
        for (const auto& p : grp.elements) {
          int v = (*vertex_action(g, p))[u];
          SubgraphRef gv = attached_subgraph(bt, v);
          EXPECT_TRUE(are_isomorphic(extract(g, gu).graph, extract(g, gv).graph).isomorphic);
          // Exactly one element of the group carries G_u onto G_v.
          int carriers = 0;
          for (const auto& q : grp.elements) {
            bool onto = true;
            for (int e : gu.edges) onto &= std::binary_search(gv.edges.begin(), gv.edges.end(), g.edge_of(q[e]));
            carriers += onto;
          }
          EXPECT_EQ(carriers, 1);
        }
      }
    }
  }
  EXPECT_GT(checked, 5);
}
