#include <gtest/gtest.h>

#include <random>
#include <set>

#include "corpus.hpp"
#include "helpers.hpp"
#include "rcover/quotient.hpp"
#include "rcover/text_format.hpp"

using namespace rcover;

namespace {

constexpr int kInstances = 200;

Graph instance(std::mt19937_64& rng, int i) {
  return i % 2 ? testing_util::random_instance(rng, 8) : testing_util::random_lift(rng, 2 + i % 3, 3);
}

}  // namespace

TEST(Properties, AtomsAreDisjointAndPermutedByAutomorphisms) {
  std::mt19937_64 rng(81);
  for (int i = 0; i < kInstances; ++i) {
    Graph g = instance(rng, i);
    auto atoms = find_atoms(g);
    std::vector<int> edge_owner(g.num_darts(), -1), interior_owner(g.num_vertices(), -1);
    std::set<std::vector<int>> edge_sets;
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      for (int e : atoms[k].edges) {
        EXPECT_EQ(edge_owner[e], -1) << i;
        edge_owner[e] = static_cast<int>(k);
      }
      for (int v : atoms[k].interior_vertices()) {
        EXPECT_EQ(interior_owner[v], -1) << i;
        interior_owner[v] = static_cast<int>(k);
      }
      // Interiors never touch other atoms' boundaries.
      for (std::size_t j = 0; j < atoms.size(); ++j)
        if (j != k) {
          auto in = atoms[k].interior_vertices();
          for (int b : atoms[j].boundary) EXPECT_FALSE(std::binary_search(in.begin(), in.end(), b));
        }
      edge_sets.insert(atoms[k].edges);
    }
    int budget = 100;
    for_each_automorphism(g, [&](const Perm& p) {
      for (const auto& a : atoms) {
        std::vector<int> img;
        for (int e : a.edges) img.push_back(g.edge_of(p[e]));
        std::sort(img.begin(), img.end());
        EXPECT_TRUE(edge_sets.count(img)) << i;
      }
      return --budget > 0;
    });
  }
}

TEST(Properties, FiberSizeAndLocalBijectivity) {
  std::mt19937_64 rng(82);
  int groups = 0;
  for (int i = 0; i < kInstances; ++i) {
    Graph g = instance(rng, i);
    if (automorphism_count(g) > 5000) continue;
    auto at = g.darts_at();
    for (const auto& grp : semiregular_subgroups(g)) {
      Quotient q = quotient(g, grp);
      ++groups;
      std::vector<std::size_t> vf(q.graph.num_vertices(), 0), df(q.graph.num_darts(), 0);
      for (int v : q.vertex_proj) vf[v]++;
      for (int d : q.dart_proj) df[d]++;
      for (auto f : vf) EXPECT_EQ(f, grp.order());
      for (auto f : df) EXPECT_EQ(f, grp.order());
      auto qat = q.graph.darts_at();
      for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> img;
        for (int h : at[v]) img.push_back(q.dart_proj[h]);
        std::sort(img.begin(), img.end());
        auto want = qat[q.vertex_proj[v]];
        std::sort(want.begin(), want.end());
        EXPECT_EQ(img, want);
      }
      // Projection commutes with the pairing.
      for (int h = 0; h < g.num_darts(); ++h) EXPECT_EQ(q.dart_proj[g.mate[h]], q.graph.mate[q.dart_proj[h]]);
    }
  }
  EXPECT_GT(groups, kInstances);
}

TEST(Properties, QuotientSetsAreRelabelInvariant) {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 40; ++i) {
    Graph g = instance(rng, i);
    if (automorphism_count(g) > 3000) continue;
    EXPECT_EQ(all_quotients(g, Via::reduction).forms(),
              all_quotients(testing_util::relabel(g, rng), Via::reduction).forms());
  }
}

TEST(Properties, CorpusRoundTripsThroughText) {
  for (const auto& [name, g] : testing_util::acceptance_corpus()) {
    EXPECT_LE(g.num_vertices(), 12) << name;
    EXPECT_TRUE(are_isomorphic(parse_graph(serialize(g)), g).isomorphic) << name;
  }
}
