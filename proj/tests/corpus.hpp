#ifndef RCOVER_TESTS_CORPUS_HPP
#define RCOVER_TESTS_CORPUS_HPP

#include <string>
#include <utility>
#include <vector>

#include "rcover/families.hpp"

namespace testing_util {

struct CorpusEntry {
  std::string name;
  rcover::Graph graph;
};

// A triangle whose edges are each doubled into two parallel 2-paths.
inline rcover::Graph necklace(int n = 3) {
  rcover::Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 2; ++k) {
      int w = g.add_vertex();
      g.add_edge(i, w);
      g.add_edge(w, (i + 1) % n);
    }
  return g;
}

// Every edge of g repeated m times.
inline rcover::Graph multiply_edges(const rcover::Graph& g, int m) {
  rcover::Graph out;
  for (const auto& n : g.vertex_names) out.add_vertex(n);
  for (int e : g.edge_ids())
    for (int k = 0; k < m; ++k) out.add_edge(g.vert[e], g.vert[g.mate[e]], g.type[e], g.color[e]);
  return out;
}

// Connected graphs on at most 12 vertices covering the structural cases of
// the reduction: decorated cycles, thetas, glued triangles, 3-connected
// graphs and multigraphs, each also with halvable edges where it matters.
inline std::vector<CorpusEntry> acceptance_corpus() {
  namespace F = rcover::families;
  using rcover::Graph;
  std::vector<CorpusEntry> plain = {
      {"c4_pendants_02", F::with_pendants(F::cycle(4), {{0, 1}, {2, 1}})},
      {"c5_pendants_all", F::with_pendants(F::cycle(5), {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}})},
      {"c6_pendants_024", F::with_pendants(F::cycle(6), {{0, 2}, {2, 2}, {4, 2}})},
      {"c6_pendants_03", F::with_pendants(F::cycle(6), {{0, 2}, {3, 2}})},
      {"c8_pendants_alt", F::with_pendants(F::cycle(8), {{0, 1}, {2, 1}, {4, 1}, {6, 1}})},
      {"theta_111", F::theta({1, 1, 1})},
      {"theta_222", F::theta({2, 2, 2})},
      {"theta_123", F::theta({1, 2, 3})},
      {"theta_1111", F::theta({1, 1, 1, 1})},
      {"theta_2222", F::theta({2, 2, 2, 2})},
      {"theta_333", F::theta({3, 3, 3})},
      {"theta_011", F::theta({0, 1, 1})},
      {"bowtie", F::glue_at_vertex(F::cycle(3), 0, F::cycle(3), 0)},
      {"triangle_chain", F::glue_at_vertex(F::glue_at_vertex(F::cycle(3), 2, F::cycle(3), 0), 3, F::cycle(3), 0)},
      {"triangle_fan", F::glue_at_vertex(F::glue_at_vertex(F::cycle(3), 0, F::cycle(3), 0), 0, F::cycle(3), 0)},
      {"triangle_of_triangles",
       F::glue_at_vertex(F::glue_at_vertex(F::glue_at_vertex(F::cycle(3), 0, F::cycle(3), 0), 1, F::cycle(3), 0), 2,
                         F::cycle(3), 0)},
      {"c4_triangles_02", F::glue_at_vertex(F::glue_at_vertex(F::cycle(4), 0, F::cycle(3), 0), 2, F::cycle(3), 0)},
      {"cube", F::cube()},
      {"k4", F::complete(4)},
      {"prism3", F::prism(3)},
      {"prism4", F::prism(4)},
      {"prism5", F::prism(5)},
      {"k33", F::complete_bipartite(3, 3)},
      {"petersen", F::petersen()},
      {"dipole_3", F::dipole({0, 0, 0})},
      {"dipole_2b2w", F::dipole({1, 1, 2, 2})},
      {"c4_doubled", multiply_edges(F::cycle(4), 2)},
      {"c3_tripled", multiply_edges(F::cycle(3), 3)},
      {"necklace3", necklace(3)},
      {"necklace4", necklace(4)},
      {"k4_doubled", multiply_edges(F::complete(4), 2)},
      {"cube_with_pendants", F::with_pendants(F::cube(), {{0, 1}, {7, 1}})},
  };
  std::vector<CorpusEntry> out;
  for (auto& e : plain) {
    out.push_back({e.name, rcover::normalize(e.graph)});
    out.push_back({e.name + "_halvable", rcover::normalize(F::halvable(e.graph))});
  }
  return out;
}

}  // namespace testing_util

#endif  // RCOVER_TESTS_CORPUS_HPP
