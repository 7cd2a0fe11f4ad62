#pragma once

// Idealized box split tree (uncompressed quadtree, 2^d children per cell),
// well-separated pair decomposition over it, and the WSPD spanner E* that
// joins the representatives of every pair.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "hopspan/analysis.hpp"
#include "hopspan/core.hpp"
#include "hopspan/random.hpp"

namespace hopspan {

inline constexpr int kSplitDepthCap = 64;

struct SplitTreeNode {
  std::vector<double> center;
  double side = 0.0;
  int level = 0;
  std::vector<int> points;    // indices into the point set, increasing
  std::vector<int> children;  // node ids, 2^d entries for internal nodes (empty cells included)
  int representative = kNone;

  bool leaf() const noexcept { return children.empty(); }
  bool empty() const noexcept { return points.empty(); }
};

struct SplitTree {
  int dim = 0;
  std::vector<SplitTreeNode> nodes;  // nodes[0] is the root

  const SplitTreeNode& root() const { return nodes.front(); }
  const SplitTreeNode& operator[](int id) const { return nodes[id]; }
  int size() const noexcept { return static_cast<int>(nodes.size()); }
};

// phi(v) = the lowest point index in P(v); kNone for empty cells.
inline void assign_representatives(SplitTree& tree) {
  for (auto& node : tree.nodes)
    node.representative = node.points.empty() ? kNone : node.points.front();
}

// Root cell is the bounding box squared up about its center. A cell owns the
// points with center[a] - side/2 <= x[a] < center[a] + side/2 on every axis,
// except that the root also owns its upper faces; a point on a splitting
// plane therefore goes to the upper child.
inline SplitTree build_split_tree(const PointSet& points) {
  const int d = points.dim();
  if (d < 1 || d > 3) throw invalid_argument("split tree supports d in {1,2,3}");
  if (points.empty()) throw invalid_argument("split tree needs at least one point");
  SplitTree tree;
  tree.dim = d;
  SplitTreeNode root;
  root.center.assign(d, 0.0);
  for (int a = 0; a < d; ++a) {
    double lo = points[0][a], hi = points[0][a];
    for (int i = 1; i < points.size(); ++i) {
      lo = std::min(lo, points[i][a]);
      hi = std::max(hi, points[i][a]);
    }
    root.center[a] = 0.5 * (lo + hi);
    root.side = std::max(root.side, hi - lo);
  }
  root.points.resize(points.size());
  std::iota(root.points.begin(), root.points.end(), 0);
  tree.nodes.push_back(std::move(root));

  const int fan = 1 << d;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    if (tree.nodes[id].points.size() <= 1) continue;
    if (tree.nodes[id].level >= kSplitDepthCap)
      throw Error("depth_exceeded", "split tree deeper than " +
                                        std::to_string(kSplitDepthCap) + " levels");
    std::vector<std::vector<int>> parts(fan);
    for (int p : tree.nodes[id].points) {
      int child = 0;
      for (int a = 0; a < d; ++a)
        if (points[p][a] >= tree.nodes[id].center[a]) child |= 1 << a;
      parts[child].push_back(p);
    }
    std::vector<int> kids;
    for (int c = 0; c < fan; ++c) {
      SplitTreeNode node;
      const auto& parent = tree.nodes[id];
      node.side = parent.side / 2;
      node.level = parent.level + 1;
      node.center = parent.center;
      for (int a = 0; a < d; ++a) node.center[a] += ((c >> a) & 1 ? 0.25 : -0.25) * parent.side;
      node.points = std::move(parts[c]);
      kids.push_back(tree.size());
      tree.nodes.push_back(std::move(node));
    }
    tree.nodes[id].children = kids;
    for (int k : kids) stack.push_back(k);
  }
  assign_representatives(tree);
  return tree;
}

// Radius of the ball used for node u: 0 about the point for a singleton,
// otherwise the ball circumscribing the cell.
inline double node_radius(const SplitTree& tree, int u) {
  const auto& node = tree[u];
  return node.points.size() == 1 ? 0.0 : node.side * std::sqrt(double(tree.dim)) / 2;
}

inline std::vector<double> node_ball_center(const SplitTree& tree, const PointSet& points, int u) {
  const auto& node = tree[u];
  if (node.points.size() == 1) {
    auto p = points[node.points.front()];
    return {p.begin(), p.end()};
  }
  return node.center;
}

struct WsPair {
  int u = 0;
  int v = 0;
  // Witness: both point sets lie in balls of radius r about these centers.
  std::vector<double> center_u, center_v;
  double radius = 0.0;
};

struct Wspd {
  double s = 0.0;
  std::vector<WsPair> pairs;
};

namespace detail {

inline double euclid(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(sum);
}

}  // namespace detail

// Called for every node pair that the pair search examines with both sides non-empty.
using WspdVisitor = std::function<void(int u, int v)>;

inline Wspd wspd(const SplitTree& tree, const PointSet& points, double s,
                 const WspdVisitor& visit = {}) {
  if (!(s > 0)) throw invalid_argument("separation ratio s must be > 0");
  Wspd out;
  out.s = s;

  auto separated = [&](int u, int v, WsPair& pair) {
    pair.center_u = node_ball_center(tree, points, u);
    pair.center_v = node_ball_center(tree, points, v);
    pair.radius = std::max(node_radius(tree, u), node_radius(tree, v));
    return detail::euclid(pair.center_u, pair.center_v) - 2 * pair.radius >= s * pair.radius;
  };

  // Pair search, with an explicit stack.
  auto pairs_of = [&](int u0, int v0) {
    std::vector<std::pair<int, int>> stack{{u0, v0}};
    while (!stack.empty()) {
      auto [u, v] = stack.back();
      stack.pop_back();
      if (tree[u].empty() || tree[v].empty()) continue;
      if (visit) visit(u, v);
      WsPair pair;
      pair.u = u;
      pair.v = v;
      if (separated(u, v, pair)) {
        out.pairs.push_back(std::move(pair));
        continue;
      }
      // Split the larger cell; a singleton cannot be split, so the other one is.
      bool split_u = tree[u].side >= tree[v].side;
      if (split_u && tree[u].leaf()) split_u = false;
      if (!split_u && tree[v].leaf()) split_u = true;
      const auto& kids = split_u ? tree[u].children : tree[v].children;
      for (auto it = kids.rbegin(); it != kids.rend(); ++it)
        stack.push_back(split_u ? std::make_pair(*it, v) : std::make_pair(u, *it));
    }
  };

  // Split tree.
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    if (tree[u].points.size() <= 1) continue;
    const auto& kids = tree[u].children;
    for (std::size_t i = 0; i < kids.size(); ++i)
      for (std::size_t j = i + 1; j < kids.size(); ++j) pairs_of(kids[i], kids[j]);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

// E*: one edge between the representatives of each pair. Requires s > 4, for
// which the stretch is at most 1 + 8/(s - 4).
inline SpannerGraph wspd_spanner(const PointSet& points, double s) {
  if (!(s > 4)) throw invalid_argument("wspd spanner needs s > 4");
  SpannerGraph g(points.size());
  if (points.size() < 2) return g;
  const SplitTree tree = build_split_tree(points);
  for (const WsPair& p : wspd(tree, points, s).pairs) {
    const int a = tree[p.u].representative, b = tree[p.v].representative;
    g.add_edge(a, b, points.distance(a, b));
  }
  return g;
}

inline double wspd_stretch_bound(double s) { return 1.0 + 8.0 / (s - 4.0); }

struct ProfileRow {
  int n = 0;
  int trial = 0;
  double w_estar = 0.0;
  double w_mst = 0.0;
  double ratio_estar = 0.0;  // w(E*) / sqrt(n)
  double ratio_mst = 0.0;    // w(MST) / sqrt(n)
};

// Uniform unit-square instances; trial t of size n uses derive_seed(seed, n, t).
inline std::vector<ProfileRow> wspd_weight_profile(const std::vector<int>& ns, double s,
                                                   int trials, std::uint64_t seed) {
  if (trials < 1) throw invalid_argument("trials must be >= 1");
  std::vector<ProfileRow> rows;
  for (int n : ns) {
    if (n < 1) throw invalid_argument("profile sizes must be >= 1");
    for (int t = 0; t < trials; ++t) {
      const PointSet pts = generate_points(PointKind::kUniform, n, 2, derive_seed(seed, n, t));
      ProfileRow r;
      r.n = n;
      r.trial = t;
      r.w_estar = wspd_spanner(pts, s).total_weight();
      r.w_mst = mst_weight(euclidean_metric(pts));
      r.ratio_estar = r.w_estar / std::sqrt(double(n));
      r.ratio_mst = r.w_mst / std::sqrt(double(n));
      rows.push_back(r);
    }
  }
  return rows;
}

// The function f(n, k) = k (sqrt(n/k) - ln(n/k) / 8).
inline double techbound_f(double n, double k) {
  return k * (std::sqrt(n / k) - std::log(n / k) / 8.0);
}

}  // namespace hopspan
