#include <gtest/gtest.h>

#include <regex>

#include "rcover/dot.hpp"
#include "rcover/families.hpp"
#include "rcover/quotient.hpp"
#include "rcover/sidecar.hpp"

using namespace rcover;
namespace F = rcover::families;

namespace {

int count(const std::string& s, const std::string& pat) {
  std::regex re(pat);
  return static_cast<int>(std::distance(std::sregex_iterator(s.begin(), s.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST(Dot, K2) {
  std::string d = to_dot(F::complete(2));
  EXPECT_EQ(count(d, R"(\bn\d+ \[label)"), 2);
  EXPECT_EQ(count(d, "->"), 1);
  EXPECT_EQ(count(d, "shape=point"), 0);
}

TEST(Dot, HalfEdgeAndPendantStubs) {
  Graph g;
  int v = g.add_vertex("a");
  g.add_half_edge(v);
  std::string d = to_dot(g);
  EXPECT_EQ(count(d, "shape=point"), 1);
  EXPECT_EQ(count(d, "->"), 1);
  g.add_pendant(v, 3);
  d = to_dot(g);
  EXPECT_EQ(count(d, "shape=point"), 2);
  EXPECT_NE(d.find("label=\"3\""), std::string::npos);
}

TEST(Dot, EdgeTypes) {
  std::string d = to_dot(F::path(2, EdgeType::directed));
  EXPECT_NE(d.find("n0 -> n1 [dir=forward]"), std::string::npos);
  EXPECT_NE(to_dot(F::path(2, EdgeType::halvable)).find("style=dashed"), std::string::npos);
}

TEST(Dot, QuotesNames) {
  Graph g;
  g.add_vertex("x\"y");
  EXPECT_NE(to_dot(g).find(R"("x\"y")"), std::string::npos);
}

TEST(Dot, BlockTreeAndReduction) {
  Graph bow = F::glue_at_vertex(F::cycle(3), 0, F::cycle(3), 0);
  std::string b = to_dot(block_tree(bow), bow);
  EXPECT_EQ(count(b, "shape=box"), 2);
  EXPECT_EQ(count(b, "penwidth=3"), 1);
  EXPECT_EQ(count(b, "--"), 2);

  std::string r = to_dot(reduction_series(F::theta({2, 2, 2})));
  EXPECT_EQ(count(r, R"(\bt\d+ \[label)"), 5);
  EXPECT_EQ(count(r, "->"), 4);
  EXPECT_NE(r.find("G2 K2"), std::string::npos);
}

TEST(Sidecar, RoundTripDrivesExpansion) {
  Graph g = F::halvable(F::theta({2, 2, 2}));
  auto rs = reduction_series(g);
  nlohmann::json j = reduction_to_json(rs);
  EXPECT_EQ(j["schema"], kSidecarSchema);
  EXPECT_EQ(j["levels"].size(), 2u);

  SidecarData d = sidecar_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(canonical_form(d.primitive_graph), canonical_form(rs.primitive_graph()));
  ASSERT_EQ(d.levels.size(), 2u);
  for (std::size_t i = 0; i < d.levels.size(); ++i) {
    ASSERT_EQ(d.levels[i].size(), rs.steps[i].classes.size());
    for (std::size_t k = 0; k < d.levels[i].size(); ++k) {
      EXPECT_EQ(d.levels[i][k].color, rs.steps[i].classes[k].color);
      EXPECT_EQ(d.levels[i][k].boundary, rs.steps[i].classes[k].boundary);
    }
  }

  // Expanding from the sidecar gives the same quotients as the series.
  for (const auto& top : quotients_of(rs.primitive_graph())) {
    GraphSet a = expand_all(rs, {top});
    GraphSet cur;
    cur.insert(top);
    for (int i = static_cast<int>(d.levels.size()) - 1; i >= 0; --i) {
      LevelExpansion lx = level_expansion(d.levels[i]);
      GraphSet next;
      for (const auto& h : cur.graphs())
        for (auto& x : expand_step(h, lx)) next.insert(std::move(x));
      cur = std::move(next);
    }
    EXPECT_EQ(a.forms(), cur.forms());
  }
}

TEST(Sidecar, Rejections) {
  nlohmann::json j = reduction_to_json(reduction_series(F::theta({1, 1, 1})));
  auto bad = j;
  bad["schema"] = "other";
  EXPECT_THROW(sidecar_from_json(bad), InputError);
  bad = j;
  bad["version"] = 99;
  EXPECT_THROW(sidecar_from_json(bad), InputError);
  bad = j;
  bad.erase("levels");
  EXPECT_THROW(sidecar_from_json(bad), InputError);
  bad = j;
  bad["levels"][0]["classes"][0]["kind"] = "nonsense";
  EXPECT_THROW(sidecar_from_json(bad), InputError);
}
