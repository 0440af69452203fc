#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rcover/families.hpp"
#include "rcover/graph.hpp"
#include "rcover/iso.hpp"
#include "rcover/text_format.hpp"

using namespace rcover;
namespace F = rcover::families;

TEST(Validate, SingleVertexIsValid) {
  Graph g;
  g.add_vertex();
  EXPECT_TRUE(validate(g).empty());
}

TEST(Validate, LoopIsValid) {
  Graph g;
  int v = g.add_vertex();
  g.add_loop(v);
  EXPECT_TRUE(validate(g).empty());
  EXPECT_EQ(g.kind(0), EdgeKind::loop);
}

TEST(Validate, NonInvolutivePairing) {
  Graph g;
  int v = g.add_vertex();
  g.add_edge(v, v);
  g.add_half_edge(v);
  g.mate = {1, 2, 2};  // h0 -> h1 -> h2, not an involution
  auto issues = validate(g);
  ASSERT_FALSE(issues.empty());
  EXPECT_TRUE(std::any_of(issues.begin(), issues.end(),
                          [](const std::string& m) { return m.find("pairing not involutive") != std::string::npos; }));
}

TEST(Validate, DirectionOnUndirectedEdge) {
  Graph g = F::cycle(3);
  g.dir[0] = 1;
  g.dir[1] = -1;
  EXPECT_FALSE(validate(g).empty());
}

TEST(Validate, DirectedEdgeNeedsTail) {
  Graph g = F::path(2, EdgeType::directed);
  EXPECT_TRUE(validate(g).empty());
  g.dir[0] = g.dir[1] = 0;
  EXPECT_FALSE(validate(g).empty());
}

TEST(Validate, DanglingVertexReference) {
  Graph g = F::path(2);
  g.vert[1] = 7;
  EXPECT_FALSE(validate(g).empty());
}

TEST(Degree, LoopCountsTwice) {
  Graph g;
  int v = g.add_vertex();
  g.add_loop(v);
  EXPECT_EQ(g.degree(v), 2);
}

TEST(Degree, PendantAndHalfEdgeCountOnce) {
  Graph g;
  int v = g.add_vertex();
  g.add_pendant(v);
  EXPECT_EQ(g.degree(v), 1);
  g.add_half_edge(v);
  EXPECT_EQ(g.degree(v), 2);
}

TEST(Degree, CubeIsCubic) {
  Graph c = F::cube();
  for (int v = 0; v < c.num_vertices(); ++v) EXPECT_EQ(c.degree(v), 3);
}

TEST(Degree, UnknownVertexThrows) { EXPECT_THROW(F::cube().degree(8), InputError); }

TEST(Counts, DartsAreTwiceEdgesPlusHalfEdges) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Graph g = testing_util::random_instance(rng);
    g.add_half_edge(0, 3);
    EXPECT_EQ(g.num_darts(), 2 * g.num_edges() + g.num_half_edges());
  }
}

TEST(Normalize, PathBecomesVertexWithTwoPendants) {
  Graph n = normalize(F::path(3));
  ASSERT_EQ(n.num_vertices(), 1);
  EXPECT_EQ(n.num_darts(), 4);
  int pendants = 0;
  for (int e : n.edge_ids()) pendants += n.kind(e) == EdgeKind::pendant;
  EXPECT_EQ(pendants, 2);
}

TEST(Normalize, K2Unchanged) {
  Graph k2 = F::complete(2);
  EXPECT_EQ(normalize(k2), k2);
}

TEST(Normalize, StarBecomesCenterWithPendants) {
  Graph n = normalize(F::star(3));
  ASSERT_EQ(n.num_vertices(), 1);
  EXPECT_EQ(n.degree(0), 3);
  for (int e : n.edge_ids()) EXPECT_EQ(n.kind(e), EdgeKind::pendant);
}

TEST(Normalize, DisconnectedThrows) {
  Graph g = F::cycle(3);
  g.add_vertex();
  EXPECT_THROW(normalize(g), InputError);
}

TEST(Normalize, IdempotentAndPreservesGroupOrder) {
  std::mt19937_64 rng(12);
  // Without pre-existing pendant edges, normalization cannot merge leaf edges
  // with pendants, so the group order is preserved.
  F::RandomParams p;
  p.pendant_rate = 0;
  for (int i = 0; i < 60; ++i) {
    Graph g = F::random_connected(rng, p);
    Graph n = normalize(g);
    EXPECT_EQ(normalize(n), n);
    for (int v = 0; v < n.num_vertices(); ++v)
      if (n.num_vertices() > 2) { EXPECT_NE(n.degree(v), 1); }
    // The oracle runs on the raw graph; the library count on the normalized one.
    if (g.num_darts() <= 24) { EXPECT_EQ(automorphism_count(n), oracle::automorphism_count(g)); }
  }
}

TEST(Components, Basic) {
  EXPECT_EQ(connected_components(F::cycle(6)).size(), 1u);
  Graph two = F::glue_at_vertex(F::cycle(3), 0, F::cycle(4), 0);
  EXPECT_EQ(connected_components(two).size(), 1u);
  Graph split = F::cycle(3);
  int base = split.num_vertices();
  for (int i = 0; i < 4; ++i) split.add_vertex();
  for (int i = 0; i < 4; ++i) split.add_edge(base + i, base + (i + 1) % 4);
  EXPECT_EQ(connected_components(split).size(), 2u);
}

TEST(Components, LoneFreeEdge) {
  Graph g;
  g.add_free_edge();
  auto cs = connected_components(g);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_TRUE(cs[0].vertices.empty());
  EXPECT_EQ(cs[0].edges.size(), 1u);
}

TEST(TextFormat, RoundTripFamilies) {
  std::mt19937_64 rng(13);
  std::vector<Graph> gs = {F::cube(), F::petersen(), F::halvable(F::dipole({0, 1, 1})), F::eight_cycle_example(),
                           F::cycle(3, EdgeType::directed), normalize(F::star(3))};
  for (int i = 0; i < 40; ++i) gs.push_back(testing_util::random_instance(rng));
  for (const auto& g : gs) {
    Graph back = parse_graph(serialize(g));
    EXPECT_EQ(back, compact(g).graph);
  }
}

TEST(TextFormat, AllItemKinds) {
  const char* text = R"(# every kind
vertex a
vertex b
edge e1 a b type=directed color=2 tail=b
loop l1 a type=halvable color=0
pendant p1 b color=1
pendant p2 b color=1 type=directed tail=*
halfedge h1 a color=4
free f1 color=0
)";
  Graph g = parse_graph(text);
  EXPECT_TRUE(validate(g).empty());
  EXPECT_EQ(g.num_vertices(), 2);
  EXPECT_EQ(g.num_half_edges(), 1);
  EXPECT_EQ(g.vertex_names[g.vert[g.tail_dart(0)]], "b");
  EXPECT_EQ(parse_graph(serialize(g)), compact(g).graph);
}

TEST(TextFormat, Rejections) {
  auto rejects = [](const std::string& t) { EXPECT_THROW(parse_graph(t), ParseError) << t; };
  rejects("vertex a\nvertex a\n");
  rejects("vertex a\nvertex b\nedge e a b type=undirected color=0\nedge e a b type=undirected color=0\n");
  rejects("vertex a\nvertex b\nedge e a b type=directed color=0\n");
  rejects("vertex a\nvertex b\nedge e a b type=undirected color=0 tail=a\n");
  rejects("vertex a\nvertex b\nedge e a b type=undirected\n");
  rejects("vertex a\nedge e a z type=undirected color=0\n");
  rejects("vertex a\nbogus x\n");
}

TEST(TextFormat, ErrorCarriesLineAndColumn) {
  try {
    parse_graph("vertex a\nvertex b\nedge e1 a c type=undirected color=0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 1);
  }
}
