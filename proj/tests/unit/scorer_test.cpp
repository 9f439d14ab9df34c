#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <memory>

using namespace blueprint;

namespace {

FloorPlanIR with_rooms(int n) {
  FloorPlanIR ir;
  for (int i = 1; i <= n; ++i) ir.rooms.push_back({i, 1000 - i, {i, i}});
  return ir;
}

RoomGraph graph(int n, std::vector<Edge> edges) {
  FloorPlanIR ir = with_rooms(n);
  ir.edges = std::move(edges);
  return to_graph(ir);
}

FloorPlanIR with_doors(int h, int v) {
  FloorPlanIR ir = with_rooms(2);
  for (int i = 0; i < h; ++i) ir.doors.push_back({{i, 0}, Orientation::Horizontal, {1, 2}});
  for (int i = 0; i < v; ++i) ir.doors.push_back({{i, 1}, Orientation::Vertical, {1, 2}});
  return ir;
}

std::vector<double> parts(const ScoreBreakdown& s) {
  return {s.edge_overlap, s.degree_corr, s.density_sim, s.room_count_sim, s.door_count_sim, s.orientation_sim,
          s.composite};
}

}  // namespace

TEST(EdgeJaccard, Examples) {
  EXPECT_EQ(edge_jaccard(graph(3, {{1, 2}, {2, 3}}), graph(3, {{1, 2}, {2, 3}})), 1.0);
  EXPECT_EQ(edge_jaccard(graph(3, {{1, 2}, {2, 3}}), graph(3, {{1, 2}})), 0.5);
  EXPECT_EQ(edge_jaccard(graph(3, {}), graph(5, {})), 1.0);
}

TEST(DegreeCorrelation, Examples) {
  const RoomGraph g = graph(4, {{1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(degree_correlation(g, g), 1.0);
  // Degrees a = [2,1,1], b = [1,2,1]: r = -0.5.
  const RoomGraph a = graph(3, {{1, 2}, {1, 3}});
  const RoomGraph b = graph(3, {{1, 2}, {2, 3}});
  EXPECT_EQ(a.degrees, (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(b.degrees, (std::vector<int>{1, 2, 1}));
  EXPECT_NEAR(degree_correlation(a, b), 0.25, 1e-15);
  EXPECT_EQ(degree_correlation(graph(3, {{1, 2}}), graph(0, {})), 0.0);
  EXPECT_EQ(degree_correlation(graph(0, {}), graph(0, {})), 1.0);
}

TEST(DegreeCorrelation, ConstantVectorFallback) {
  // a = [1,1], b = [1,1] is the identical branch; a = [0,0,0] vs b = [1,1,0].
  EXPECT_EQ(degree_correlation(graph(2, {{1, 2}}), graph(2, {{1, 2}})), 1.0);
  const RoomGraph a = graph(3, {});
  const RoomGraph b = graph(3, {{1, 2}});
  EXPECT_NEAR(degree_correlation(a, b), 1.0 - (2.0 / 3.0) / 1.0, 1e-15);
}

TEST(DensitySimilarity, Examples) {
  const RoomGraph g = graph(4, {{1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(density_similarity(g, g), 1.0);
  const RoomGraph full = graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  EXPECT_EQ(graph_density(g), 0.5);
  EXPECT_EQ(graph_density(full), 1.0);
  EXPECT_EQ(density_similarity(g, full), 0.5);
  EXPECT_EQ(density_similarity(graph(1, {}), graph(1, {})), 1.0);
}

TEST(CountSimilarity, Examples) {
  EXPECT_EQ(count_similarity(5, 5), 1.0);
  EXPECT_EQ(count_similarity(3, 4), 0.75);
  EXPECT_EQ(count_similarity(0, 2), 0.0);
  EXPECT_EQ(count_similarity(0, 0), 1.0);
}

TEST(OrientationSimilarity, Examples) {
  EXPECT_EQ(orientation_similarity(with_doors(3, 0), with_doors(5, 0)), 1.0);
  EXPECT_EQ(orientation_similarity(with_doors(2, 2), with_doors(4, 0)), 0.5);
  EXPECT_EQ(orientation_similarity(with_doors(0, 0), with_doors(2, 1)), 0.0);
  EXPECT_EQ(orientation_similarity(with_doors(0, 0), with_doors(0, 0)), 1.0);
}

TEST(Weights, OneHotBreakdowns) {
  EXPECT_EQ(weighted_composite(1, 0, 0, 0, 0, 0), 0.50);
  EXPECT_EQ(weighted_composite(0, 1, 0, 0, 0, 0), 0.20);
  EXPECT_EQ(weighted_composite(0, 0, 1, 0, 0, 0), 0.10);
  EXPECT_EQ(weighted_composite(0, 0, 0, 1, 0, 0), 0.10);
  EXPECT_EQ(weighted_composite(0, 0, 0, 0, 1, 0), 0.05);
  EXPECT_EQ(weighted_composite(0, 0, 0, 0, 0, 1), 0.05);
  EXPECT_EQ(weighted_composite(1, 1, 1, 1, 1, 1), 1.0);
  int sum = 0;
  for (int w : kWeightPercent) sum += w;
  EXPECT_EQ(sum, 100);
}

TEST(CompositeScore, IdentityIsExact) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const FloorPlanIR g = testing_support::random_ir(rng);
    for (double p : parts(composite_score(g, g))) ASSERT_EQ(p, 1.0);
  }
}

TEST(CompositeScore, SymmetricAndBounded) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 2000; ++trial) {
    const FloorPlanIR a = testing_support::random_ir(rng);
    const FloorPlanIR b = testing_support::random_ir(rng);
    const auto ab = parts(composite_score(a, b));
    const auto ba = parts(composite_score(b, a));
    for (std::size_t i = 0; i < ab.size(); ++i) {
      ASSERT_GE(ab[i], 0.0);
      ASSERT_LE(ab[i], 1.0);
      ASSERT_NEAR(ab[i], ba[i], 1e-12) << "component " << i;
    }
  }
}

TEST(CompositeScore, ChainMissingOneEdge) {
  FloorPlanIR truth = with_rooms(4);
  truth.doors = {{{10, 0}, Orientation::Vertical, {1, 2}},
                 {{20, 0}, Orientation::Horizontal, {2, 3}},
                 {{30, 0}, Orientation::Vertical, {3, 4}}};
  truth.edges = edges_from_doors(truth.doors);
  FloorPlanIR cand = truth;
  cand.doors.pop_back();
  cand.edges = edges_from_doors(cand.doors);
  const ScoreBreakdown s = composite_score(cand, truth);
  EXPECT_NEAR(s.edge_overlap, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(s.door_count_sim, 2.0 / 3.0, 1e-15);
  EXPECT_EQ(s.room_count_sim, 1.0);
  EXPECT_NEAR(s.density_sim, 1.0 - (3.0 / 6.0 - 2.0 / 6.0), 1e-15);
}

TEST(CompositeScore, RankSwapChangesOverlapIffEdgeSetChanges) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 500; ++trial) {
    const FloorPlanIR truth = testing_support::random_ir(rng);
    const int n = static_cast<int>(truth.rooms.size());
    if (n < 2) continue;
    const int x = 1 + static_cast<int>(rng() % n);
    int y = 1 + static_cast<int>(rng() % n);
    if (x == y) y = x % n + 1;
    FloorPlanIR cand = truth;
    for (Edge& e : cand.edges) {
      auto sw = [&](int r) { return r == x ? y : r == y ? x : r; };
      e = Edge::of(sw(e.a), sw(e.b));
    }
    cand = canonical(std::move(cand));
    const bool changed = to_graph(cand).edges != to_graph(truth).edges;
    ASSERT_EQ(composite_score(cand, truth).edge_overlap < 1.0, changed);
  }
}

TEST(CompositeScore, FixturesMatchHandValues) {
  const fs::path dir = fs::path(BLUEPRINT_ORACLE_DIR) / "fixtures";
  int checked = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto j = nlohmann::json::parse(read_file(entry.path()));
    const ScoreBreakdown s = composite_score(from_json(j.at("candidate")), from_json(j.at("truth")));
    const nlohmann::json got = to_json(s);
    for (const auto& [key, want] : j.at("expected").items())
      EXPECT_NEAR(got.at(key).get<double>(), want.get<double>(), 1e-12) << entry.path().filename() << " " << key;
    ++checked;
  }
  EXPECT_GE(checked, 3);
}

TEST(CompositeScore, AgreesWithScriptOracleOnRandomPairs) {
  if (std::system("python3 --version > /dev/null 2>&1") != 0) GTEST_SKIP() << "python3 not available";
  testing_support::TempDir dir;
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const FloorPlanIR a = testing_support::random_ir(rng);
    const FloorPlanIR b = testing_support::random_ir(rng);
    testing_support::write_file(dir / "a.json", serialize(a));
    testing_support::write_file(dir / "b.json", serialize(b));
    const std::string cmd = "python3 \"" + (fs::path(BLUEPRINT_ORACLE_DIR) / "score_oracle.py").string() + "\" \"" +
                            (dir / "a.json").string() + "\" \"" + (dir / "b.json").string() + "\"";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    ASSERT_TRUE(pipe);
    std::string text;
    char buf[512];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe.get())) text.append(buf, n);
    const auto want = nlohmann::json::parse(text);
    const auto got = to_json(composite_score(a, b));
    for (const auto& [key, value] : want.items())
      ASSERT_NEAR(got.at(key).get<double>(), value.get<double>(), 1e-12) << "trial " << trial << " " << key;
  }
}
