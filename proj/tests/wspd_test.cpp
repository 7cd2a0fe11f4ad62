#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "frozen.hpp"
#include "hopspan/wspd.hpp"
#include "checks.hpp"
#include "oracles.hpp"

using namespace hopspan;
using checks::check_wspd;

namespace {

std::vector<std::vector<double>> point_distances(const PointSet& p) {
  std::vector<std::vector<double>> d(p.size(), std::vector<double>(p.size()));
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) {
      double s = 0;
      for (int a = 0; a < p.dim(); ++a) s += (p[i][a] - p[j][a]) * (p[i][a] - p[j][a]);
      d[i][j] = std::sqrt(s);
    }
  return d;
}

double g(int x) { return std::sqrt(double(x)) - std::log(double(x)) / 8.0; }

}  // namespace

TEST(SplitTree, SinglePointIsLeaf) {
  const PointSet p(2, {{0.3, 0.4}});
  const auto t = build_split_tree(p);
  EXPECT_EQ(t.size(), 1);
  EXPECT_TRUE(t.root().leaf());
  EXPECT_EQ(t.root().representative, 0);
}

TEST(SplitTree, SquareCorners) {
  const PointSet p(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const auto t = build_split_tree(p);
  ASSERT_EQ(t.root().children.size(), 4u);
  EXPECT_EQ(t.size(), 5);
  for (int c : t.root().children) {
    EXPECT_TRUE(t[c].leaf());
    EXPECT_EQ(t[c].points.size(), 1u);
  }
}

TEST(SplitTree, StructureOnRandomPoints) {
  const auto p = generate_points(PointKind::kUniform, 128, 2, 12);
  const auto t = build_split_tree(p);
  std::vector<int> leaf_count(128, 0);
  for (int u = 0; u < t.size(); ++u) {
    const auto& node = t[u];
    EXPECT_DOUBLE_EQ(node.side, t.root().side / std::pow(2.0, node.level));
    EXPECT_EQ(node.leaf(), node.points.size() <= 1);
    for (int i : node.points)
      for (int a = 0; a < 2; ++a) EXPECT_LE(std::abs(p[i][a] - node.center[a]), node.side / 2 + 1e-12);
    if (node.leaf()) {
      for (int i : node.points) ++leaf_count[i];
      continue;
    }
    std::vector<int> merged;
    for (int c : node.children) {
      EXPECT_EQ(t[c].level, node.level + 1);
      merged.insert(merged.end(), t[c].points.begin(), t[c].points.end());
    }
    std::sort(merged.begin(), merged.end());
    EXPECT_EQ(merged, node.points);
    if (!node.empty()) {
      EXPECT_TRUE(std::binary_search(node.points.begin(), node.points.end(), node.representative));
      EXPECT_EQ(node.representative, node.points.front());
    }
  }
  for (int c : leaf_count) EXPECT_EQ(c, 1);
  EXPECT_EQ(t.root().representative, 0);
}

TEST(SplitTree, DepthCapAndDuplicates) {
  try {
    build_split_tree(PointSet(2, {{0, 0}, {1e-30, 0}, {1, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "depth_exceeded");
  }
  EXPECT_THROW(PointSet(2, {{0, 0}, {0, 0}}), Error);
}

TEST(Wspd, SinglePointIsEmpty) {
  const PointSet p(2, {{0.5, 0.5}});
  EXPECT_TRUE(wspd(build_split_tree(p), p, 2.0).pairs.empty());
}

TEST(Wspd, TwoPointsOnePairAnyS) {
  const PointSet p(2, {{0, 0}, {0.2, 0.9}});
  for (double s : {0.5, 2.0, 100.0, 1e6}) {
    const auto t = build_split_tree(p);
    const auto w = wspd(t, p, s);
    ASSERT_EQ(w.pairs.size(), 1u);
    EXPECT_EQ(check_wspd(p, t, w), "");
  }
}

TEST(Wspd, GridSixteenCoverage) {
  const auto p = generate_points(PointKind::kGrid, 16, 2, 0);
  const auto t = build_split_tree(p);
  EXPECT_EQ(check_wspd(p, t, wspd(t, p, 2.0)), "");
}

TEST(Wspd, AxiomsOnRandomInstances) {
  for (auto kind : {PointKind::kUniform, PointKind::kClustered})
    for (int n : {2, 17, 64, 256})
      for (double s : {0.5, 2.0, 6.0, 12.0}) {
        const auto p = generate_points(kind, n, 2, 1000 + n);
        const auto t = build_split_tree(p);
        ASSERT_EQ(check_wspd(p, t, wspd(t, p, s)), "") << n << " " << s;
      }
}

TEST(Wspd, OtherDimensions) {
  for (int d : {1, 3}) {
    const auto p = generate_points(PointKind::kUniform, 100, d, 5);
    const auto t = build_split_tree(p);
    EXPECT_EQ(t.root().children.size(), std::size_t{1} << d);
    EXPECT_EQ(check_wspd(p, t, wspd(t, p, 4.0)), "") << d;
  }
}

TEST(Wspd, DistMaxSandwichOnVisitedPairs) {
  const auto p = generate_points(PointKind::kUniform, 128, 2, 21);
  const auto t = build_split_tree(p);
  int visited = 0;
  wspd(t, p, 6.0, [&](int u, int v) {
    ++visited;
    const int a = t[u].representative, b = t[v].representative;
    const double rep = p.distance(a, b);
    double dmax = 0;
    for (int i : t[u].points)
      for (int j : t[v].points) dmax = std::max(dmax, p.distance(i, j));
    EXPECT_LE(rep, dmax + 1e-12);
    EXPECT_LE(dmax, rep + 2 * std::sqrt(2.0) * std::max(t[u].side, t[v].side) + 1e-12);
  });
  EXPECT_GT(visited, 0);
}

TEST(Wspd, PairCountLinear) {
  for (auto kind : {PointKind::kUniform, PointKind::kClustered})
    for (int n : {64, 128, 256})
      for (double s : {2.0, 6.0, 8.0, 12.0}) {
        const auto p = generate_points(kind, n, 2, 77 + n);
        const auto w = wspd(build_split_tree(p), p, s);
        EXPECT_LE(w.pairs.size(), frozen::kPairsPerPoint(s) * n) << n << " " << s;
      }
}

TEST(WspdSpanner, TwoPoints) {
  const PointSet p(2, {{0, 0}, {3, 4}});
  const auto g = wspd_spanner(p, 12.0);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_DOUBLE_EQ(g.edges()[0].w, 5.0);
  EXPECT_THROW(wspd_spanner(p, 4.0), Error);
}

TEST(WspdSpanner, StretchWithinBound) {
  for (double s : {6.0, 8.0, 12.0, 20.0}) {
    const int n = s == 8.0 ? 256 : 128;
    const auto p = generate_points(PointKind::kUniform, n, 2, 300 + static_cast<int>(s));
    const auto g = wspd_spanner(p, s);
    const auto sp = oracle::graph_all_pairs(g);
    const auto d = point_distances(p);
    double worst = 1.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) worst = std::max(worst, sp[i][j] / d[i][j]);
    EXPECT_LE(worst, wspd_stretch_bound(s) + 1e-9) << s;
    const double cap = s == 12.0 ? 2.0 : s == 8.0 ? 3.0 : wspd_stretch_bound(s);
    EXPECT_LE(worst, cap);
  }
}

TEST(WeightProfile, SinglePointHasZeroWeight) {
  const auto rows = wspd_weight_profile({1}, 8.0, 2, 1);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].w_estar, 0.0);
  EXPECT_EQ(rows[0].w_mst, 0.0);
}

TEST(WeightProfile, Deterministic) {
  const auto a = wspd_weight_profile({64, 128}, 8.0, 3, 9);
  const auto b = wspd_weight_profile({64, 128}, 8.0, 3, 9);
  ASSERT_EQ(a.size(), 6u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].w_estar, b[i].w_estar);
    EXPECT_GT(a[i].ratio_mst, frozen::kMstRatioFloor);
  }
}

// The summand is order-independent, so partitions cover every composition
// value; compositions are enumerated outright for n <= 20.
TEST(TechBound, PartitionsUpToThirty) {
  long long checked = 0;
  std::function<void(int, int, int, double, int)> walk = [&](int n, int left, int cap, double sum,
                                                             int parts) {
    if (left == 0) {
      ++checked;
      ASSERT_LE(sum, techbound_f(n, parts) + 1e-12) << n << " " << parts;
      return;
    }
    for (int x = std::min(left, cap); x >= 1; --x) walk(n, left - x, x, sum + g(x), parts + 1);
  };
  for (int n = 1; n <= 30; ++n) walk(n, n, n, 0.0, 0);
  EXPECT_EQ(checked, 28628);  // Σ p(n) for n = 1..30
}

TEST(TechBound, CompositionsUpToTwenty) {
  long long checked = 0;
  std::function<void(int, int, double, int)> walk = [&](int n, int left, double sum, int parts) {
    if (left == 0) {
      ++checked;
      if (sum > techbound_f(n, parts) + 1e-12) ADD_FAILURE() << n << " " << parts;
      return;
    }
    for (int x = 1; x <= left; ++x) walk(n, left - x, sum + g(x), parts + 1);
  };
  for (int n = 1; n <= 20; ++n) walk(n, n, 0.0, 0);
  EXPECT_EQ(checked, (1LL << 20) - 1);
}
