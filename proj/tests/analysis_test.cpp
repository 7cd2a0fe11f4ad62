#include <gtest/gtest.h>

#include <cmath>

#include "hopspan/analysis.hpp"
#include "hopspan/line_spanner.hpp"
#include "hopspan/tree_metric.hpp"
#include "hopspan/tree_spanner.hpp"
#include "oracles.hpp"

using namespace hopspan;

namespace {

std::vector<std::vector<double>> point_distances(const PointSet& p) {
  std::vector<std::vector<double>> d(p.size(), std::vector<double>(p.size()));
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) d[i][j] = p.distance(i, j);
  return d;
}

SpannerGraph complete(const PointSet& p) {
  SpannerGraph g(p.size());
  for (int a = 0; a < p.size(); ++a)
    for (int b = a + 1; b < p.size(); ++b) g.add_edge(a, b, p.distance(a, b));
  return g;
}

const PointSet kSquare(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});

}  // namespace

TEST(Mst, HandCases) {
  EXPECT_DOUBLE_EQ(mst_weight(euclidean_metric(kSquare)), 3.0);
  EXPECT_DOUBLE_EQ(mst_weight(euclidean_metric(PointSet(1, {{0}, {1}, {3}}))), 3.0);
  EXPECT_EQ(mst_weight(euclidean_metric(PointSet(2, {{4, 4}}))), 0.0);
}

TEST(Mst, MatchesKruskalOnHundredInstances) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = seed == 0 ? 128 : 5 + static_cast<int>(seed % 60);
    const auto p = generate_points(seed % 3 ? PointKind::kUniform : PointKind::kClustered, n, 2, seed);
    ASSERT_TRUE(oracle::close(mst_weight(euclidean_metric(p)), oracle::kruskal(point_distances(p))))
        << seed;
  }
}

TEST(Lightness, HandCases) {
  const auto m = euclidean_metric(kSquare);
  SpannerGraph mst(4);
  mst.add_edge(0, 1, 1);
  mst.add_edge(0, 2, 1);
  mst.add_edge(1, 3, 1);
  EXPECT_DOUBLE_EQ(lightness(mst, m), 1.0);
  auto more = mst;
  more.add_edge(2, 3, 1);
  EXPECT_DOUBLE_EQ(lightness(more, m), 4.0 / 3.0);
  EXPECT_NEAR(lightness(complete(kSquare), m), (4 + 2 * std::sqrt(2.0)) / 3, 1e-12);
  EXPECT_THROW(lightness(SpannerGraph(1), euclidean_metric(PointSet(2, {{0, 0}}))), Error);
}

TEST(Stretch, CompleteAndPath) {
  EXPECT_DOUBLE_EQ(stretch(complete(kSquare), euclidean_metric(kSquare)), 1.0);
  const PointSet line(1, {{0}, {1}, {2.5}, {7}});
  SpannerGraph path(4);
  for (int i = 1; i < 4; ++i) path.add_edge(i - 1, i, line.distance(i - 1, i));
  EXPECT_NEAR(stretch(path, euclidean_metric(line)), 1.0, 1e-12);
}

TEST(Stretch, DisconnectedSignalled) {
  const PointSet p(2, {{0, 0}, {1, 0}});
  try {
    stretch(SpannerGraph(2), euclidean_metric(p));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "disconnected");
  }
}

TEST(Stretch, MatchesFloydWarshall) {
  const auto p = generate_points(PointKind::kUniform, 60, 2, 4);
  SpannerGraph g(60);
  for (int i = 1; i < 60; ++i) g.add_edge(i - 1, i, p.distance(i - 1, i));
  for (int i = 0; i + 7 < 60; i += 3) g.add_edge(i, i + 7, p.distance(i, i + 7));
  const auto sp = oracle::graph_all_pairs(g);
  double worst = 1.0;
  for (int i = 0; i < 60; ++i)
    for (int j = i + 1; j < 60; ++j) worst = std::max(worst, sp[i][j] / p.distance(i, j));
  EXPECT_TRUE(oracle::close(stretch(g, euclidean_metric(p)), worst));
  const auto rep = stretch_report(g, euclidean_metric(p));
  EXPECT_FALSE(rep.sampled);
  EXPECT_TRUE(oracle::close(rep.stretch, worst));
}

TEST(HopDiameter, CompleteAndPath) {
  EXPECT_EQ(hop_diameter(complete(kSquare), euclidean_metric(kSquare), 1.0), 1);
  const int n = 9;
  const auto p = generate_points(PointKind::kCollinear, n, 1, 0);
  SpannerGraph path(n);
  for (int i = 1; i < n; ++i) path.add_edge(i - 1, i, 1.0);
  EXPECT_EQ(hop_diameter(path, euclidean_metric(p), 1.0), n - 1);
}

TEST(HopDiameter, PreconditionSignalled) {
  const PointSet p(1, {{0}, {1}, {2}});
  SpannerGraph g(3);
  g.add_edge(0, 1, 1);
  g.add_edge(1, 2, 1);
  EXPECT_EQ(hop_diameter(g, euclidean_metric(p), 1.0), 2);
  const PointSet bent(2, {{0, 0}, {1, 1}, {2, 0}});
  SpannerGraph h(3);
  h.add_edge(0, 1, bent.distance(0, 1));
  h.add_edge(1, 2, bent.distance(1, 2));
  try {
    hop_diameter(h, euclidean_metric(bent), 1.2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "stretch_precondition");
  }
  EXPECT_EQ(hop_diameter(h, euclidean_metric(bent), 1.5), 2);
}

TEST(HopDiameter, MatchesDenseOracle) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto p = generate_points(PointKind::kUniform, 40, 2, seed);
    SpannerGraph g(40);
    for (int i = 1; i < 40; ++i) g.add_edge(i - 1, i, p.distance(i - 1, i));
    for (int i = 0; i < 40; ++i) {
      const int j = (i * 7 + 3) % 40;
      if (j != i) g.add_edge(i, j, p.distance(i, j));
    }
    const double t = stretch(g, euclidean_metric(p)) * 1.01;
    EXPECT_EQ(hop_diameter(g, euclidean_metric(p), t), oracle::hop_diameter(g, point_distances(p), t));
  }
}

TEST(HopDiameter, LineLowSixtyFourKTwo) {
  const auto inst = LineInstance::uniform(64);
  const auto g = build_line_low(inst, 2);
  EXPECT_LE(hop_diameter(g, inst.metric(), 1.0), 2 * (2 * 6 + 1) + list_hop_bound(3));
}

TEST(HopDiameter, EqualsMonotoneLambdaOnTreeSpanners) {
  for (std::uint64_t seed : {1u, 2u}) {
    const auto t = generate_tree(TreeKind::kRandom, 150, seed);
    const auto metric = tree_metric(t);
    for (const auto& g : {build_tree_low(t, 5), build_tree_high(t, 5)}) {
      EXPECT_EQ(hop_diameter(g, metric, 1.0), monotone_diameter(t, g).lambda);
    }
  }
}

TEST(MaxDegree, HandCases) {
  SpannerGraph path(5), star(6);
  for (int i = 1; i < 5; ++i) path.add_edge(i - 1, i, 1);
  for (int i = 1; i < 6; ++i) star.add_edge(0, i, 1);
  EXPECT_EQ(max_degree(path), 2);
  EXPECT_EQ(max_degree(star), 5);
  EXPECT_EQ(max_degree(SpannerGraph(1)), 0);
}
