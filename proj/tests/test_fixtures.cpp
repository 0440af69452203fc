#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "rcover/families.hpp"
#include "rcover/quotient.hpp"
#include "rcover/text_format.hpp"

using namespace rcover;
namespace fs = std::filesystem;

namespace {

const fs::path kDir = RCOVER_FIXTURE_DIR;

nlohmann::json manifest() {
  std::ifstream in(kDir / "manifest.json");
  return nlohmann::json::parse(in);
}

Graph load(const nlohmann::json& c, const std::string& file) {
  Graph g = normalize(read_graph_file((kDir / file).string()));
  return c.value("halvable", false) ? families::halvable(g) : g;
}

class Fixture : public ::testing::TestWithParam<nlohmann::json> {};

}  // namespace

// Expected values are checked against the exhaustive oracles where those are
// affordable and against the library otherwise.
TEST_P(Fixture, MatchesExpectations) {
  const auto& c = GetParam();
  const auto& ex = c.at("expect");
  Graph g = load(c, c.at("file"));
  const bool small = g.num_darts() <= 24;

  if (ex.contains("aut_order")) {
    std::uint64_t want = ex.at("aut_order");
    EXPECT_EQ(automorphism_count(g), want);
    if (small) { EXPECT_EQ(oracle::automorphism_count(g), want); }
  }
  if (ex.contains("reduction_length") || ex.contains("primitive")) {
    auto rs = reduction_series(g);
    if (ex.contains("reduction_length")) { EXPECT_EQ(rs.length(), ex.at("reduction_length").get<int>()); }
    if (ex.contains("primitive")) { EXPECT_EQ(to_string(rs.primitive.tag), ex.at("primitive").get<std::string>()); }
  }
  if (ex.contains("atoms")) { EXPECT_EQ(find_atoms(g).size(), ex.at("atoms").get<std::size_t>()); }
  if (ex.contains("quotients")) {
    std::size_t want = ex.at("quotients");
    EXPECT_EQ(all_quotients(g, Via::reduction).size(), want);
    EXPECT_EQ(all_quotients(g, Via::bruteforce).size(), want);
    if (small) { EXPECT_EQ(oracle::all_quotients(g).size(), want); }
  }
  if (c.contains("covers")) {
    Graph h = load(c, c.at("covers").at("file"));
    EXPECT_EQ(regular_cover_test(g, h).covers, c.at("covers").at("yes").get<bool>());
  }
}

INSTANTIATE_TEST_SUITE_P(Manifest, Fixture, ::testing::ValuesIn(manifest().at("cases").get<std::vector<nlohmann::json>>()),
                         [](const auto& info) { return info.param.at("name").template get<std::string>(); });

TEST(FixtureFiles, MalformedReportsPosition) {
  try {
    read_graph_file((kDir / "malformed.g").string());
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(FixtureFiles, EveryGraphFileParses) {
  int n = 0;
  for (const auto& entry : fs::directory_iterator(kDir)) {
    if (entry.path().extension() != ".g" || entry.path().stem() == "malformed") continue;
    Graph g = read_graph_file(entry.path().string());
    EXPECT_TRUE(validate(g).empty()) << entry.path();
    ++n;
  }
  EXPECT_GE(n, 20);
}
