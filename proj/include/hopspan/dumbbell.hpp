#pragma once

// Dumbbell forest substitute and the Euclidean assembly: every tree is a
// binary tree whose leaves are the points; internal vertices carry
// representative labels propagated up from the leaves. A point pair is served
// by a tree when walking from representative to representative along the
// tree path between the two leaves costs at most (1+eps) times their
// distance. Tree 1-spanners built on the forest are translated to the points.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <tuple>
#include <string>
#include <vector>

#include "hopspan/analysis.hpp"
#include "hopspan/core.hpp"
#include "hopspan/tree_spanner.hpp"

namespace hopspan {

// A rooted binary tree over tree-vertices 0..size-1. Leaves carry points;
// label[v] is the representative point of v (the leaf's own point for leaves).
struct DumbbellTree {
  std::vector<int> parent;                 // parent[root] == root
  std::vector<std::vector<int>> children;  // 0 or 2 entries
  std::vector<int> leaf_point;             // point of a leaf, kNone for internal vertices
  std::vector<int> label;
  int root = kNone;

  int size() const noexcept { return static_cast<int>(parent.size()); }
  bool is_leaf(int v) const { return children[v].empty(); }

  // Weight of the edge above v: distance between the labels of v and its parent.
  double edge_weight(const MetricOracle& metric, int v) const {
    return v == root ? 0.0 : metric(label[v], label[parent[v]]);
  }
  double weight(const MetricOracle& metric) const {
    double w = 0.0;
    for (int v = 0; v < size(); ++v) w += edge_weight(metric, v);
    return w;
  }
  // Number of tree vertices labeled by each point.
  std::vector<int> label_counts(int n) const {
    std::vector<int> c(n, 0);
    for (int l : label) ++c[l];
    return c;
  }
};

struct DumbbellForest {
  int n = 0;
  std::vector<DumbbellTree> trees;
  int size() const noexcept { return static_cast<int>(trees.size()); }
};

// Bottom-up label propagation. Each internal vertex receives the propagated
// label of both children, keeps the one arriving from the child whose subtree
// has the smaller minimum point index, and propagates the other.
inline void assign_labels(DumbbellTree& t) {
  const int sz = t.size();
  t.label.assign(sz, kNone);
  std::vector<int> propagated(sz, kNone), min_point(sz, kNone);
  std::vector<int> order;
  order.reserve(sz);
  std::vector<int> stack{t.root};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int c : t.children[v]) stack.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    if (t.is_leaf(v)) {
      if (t.leaf_point[v] == kNone) throw invalid_argument("leaf without a point");
      t.label[v] = propagated[v] = min_point[v] = t.leaf_point[v];
      continue;
    }
    if (t.children[v].size() != 2) throw invalid_argument("dumbbell trees must be binary");
    int a = t.children[v][0], b = t.children[v][1];
    if (min_point[b] < min_point[a]) std::swap(a, b);
    t.label[v] = propagated[a];
    propagated[v] = propagated[b];
    min_point[v] = min_point[a];
  }
}

// Representative-walk distances between all pairs of leaves of one tree,
// indexed by point.
inline std::vector<std::vector<double>> leaf_walk_distances(const DumbbellTree& t,
                                                            const MetricOracle& metric) {
  const int n = metric.n;
  const int sz = t.size();
  std::vector<std::vector<int>> adj(sz);
  for (int v = 0; v < sz; ++v)
    if (v != t.root) {
      adj[v].push_back(t.parent[v]);
      adj[t.parent[v]].push_back(v);
    }
  std::vector<std::vector<double>> out(n, std::vector<double>(n, kInf));
  std::vector<double> dist(sz);
  std::vector<int> stack;
  for (int src = 0; src < sz; ++src) {
    if (!t.is_leaf(src)) continue;
    std::fill(dist.begin(), dist.end(), -1.0);
    dist[src] = 0.0;
    stack.assign(1, src);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (dist[y] < 0) {
          dist[y] = dist[x] + metric(t.label[x], t.label[y]);
          stack.push_back(y);
        }
    }
    for (int v = 0; v < sz; ++v)
      if (t.is_leaf(v)) out[t.leaf_point[src]][t.leaf_point[v]] = dist[v];
  }
  return out;
}

struct DumbbellReport {
  double max_stretch = 1.0;
  int worst_p = kNone, worst_q = kNone;
  std::vector<std::vector<int>> best_tree;  // per pair, index of the best tree
  bool passed = false;
};

inline DumbbellReport verify_dumbbell(const DumbbellForest& forest, const PointSet& points,
                                      double eps) {
  const int n = points.size();
  const MetricOracle metric = euclidean_metric(points);
  DumbbellReport r;
  r.best_tree.assign(n, std::vector<int>(n, kNone));
  std::vector<std::vector<double>> best(n, std::vector<double>(n, kInf));
  for (int i = 0; i < forest.size(); ++i) {
    const auto& t = forest.trees[i];
    std::vector<int> seen(n, 0);
    for (int v = 0; v < t.size(); ++v)
      if (t.is_leaf(v)) ++seen[t.leaf_point[v]];
    for (int p = 0; p < n; ++p)
      if (seen[p] != 1)
        throw Error("bad_forest", "tree " + std::to_string(i) + " does not have point " +
                                      std::to_string(p) + " at exactly one leaf");
    const auto walk = leaf_walk_distances(t, metric);
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double ratio = walk[p][q] / metric(p, q);
        if (ratio < best[p][q]) {
          best[p][q] = ratio;
          r.best_tree[p][q] = r.best_tree[q][p] = i;
        }
      }
  }
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (best[p][q] > r.max_stretch) {
        r.max_stretch = best[p][q];
        r.worst_p = p;
        r.worst_q = q;
      }
  r.passed = r.max_stretch <= (1 + eps) * (1 + kRelTol);
  return r;
}

namespace detail {

// One tree of the cover, grown by merging components under a new binary
// vertex. The new vertex keeps one of the two arriving labels and propagates
// the other, so every label is used at most twice. up[p] is the walk length
// from leaf p to the root of its component.
class ForestTreeBuilder {
 public:
  ForestTreeBuilder(const MetricOracle& metric, std::vector<char>& served, double eps)
      : metric_(metric), n_(metric.n), served_(served), limit_(1 + eps) {
    t_.parent.reserve(2 * n_ - 1);
    for (int p = 0; p < n_; ++p) {
      t_.parent.push_back(p);
      t_.children.push_back({});
      t_.leaf_point.push_back(p);
      label_.push_back(p);
      propagated_.push_back(p);
    }
    members_.resize(n_);
    comp_root_.resize(n_);
    comp_.resize(n_);
    stamp_.assign(n_, 0);
    for (int p = 0; p < n_; ++p) {
      members_[p] = {p};
      comp_root_[p] = p;
      comp_[p] = p;
    }
    up_.assign(n_, 0.0);
  }

  int component(int p) const { return comp_[p]; }

  // Repeatedly performs the merge that serves the most unserved pairs (ties:
  // shorter join, then lower ids) until no merge serves any.
  void grow() {
    for (int p = 0; p < n_; ++p)
      for (int q = p + 1; q < n_; ++q) consider(p, q);
    while (!queue_.empty()) {
      const Candidate c = queue_.top();
      queue_.pop();
      if (stamp_[c.a] != c.stamp_a || stamp_[c.b] != c.stamp_b) continue;
      merge(c.a, c.b, c.keep);
      for (int other = 0; other < n_; ++other)
        if (other != c.a && !members_[other].empty()) consider(c.a, other);
    }
  }

  // Joins whatever is left in the given pair order.
  template <class Pairs>
  void link(const Pairs& pairs) {
    for (const auto& e : pairs) {
      const int a = comp_[e.p], b = comp_[e.q];
      if (a != b) merge(a, b, propagated_[comp_root_[a]]);
    }
  }

  DumbbellTree finish() {
    t_.root = comp_root_[comp_[0]];
    t_.label = label_;
    t_.parent[t_.root] = t_.root;
    return std::move(t_);
  }

 private:
  struct Candidate {
    long long gain;
    double join;
    int a, b, keep;
    int stamp_a, stamp_b;
    bool operator<(const Candidate& o) const {  // max-heap order
      if (gain != o.gain) return gain < o.gain;
      if (join != o.join) return join > o.join;
      return std::tie(a, b, keep) > std::tie(o.a, o.b, o.keep);
    }
  };

  bool fits(int p, int q, double via) const {
    return up_[p] + via + up_[q] <= limit_ * metric_(p, q) * (1 - kRelTol);
  }

  long long gain(int a, int b, int keep) const {
    const double via = metric_(label_[comp_root_[a]], keep) + metric_(keep, label_[comp_root_[b]]);
    long long g = 0;
    for (int p : members_[a])
      for (int q : members_[b])
        if (!served_[idx(p, q)] && fits(p, q, via)) ++g;
    return g;
  }

  void consider(int a, int b) {
    if (a > b) std::swap(a, b);
    Candidate best{0, 0.0, a, b, kNone, stamp_[a], stamp_[b]};
    for (int keep : {propagated_[comp_root_[a]], propagated_[comp_root_[b]]}) {
      const long long g = gain(a, b, keep);
      if (g > best.gain) {
        best.gain = g;
        best.keep = keep;
      }
    }
    if (best.gain == 0) return;
    best.join = metric_(label_[comp_root_[a]], label_[comp_root_[b]]);
    queue_.push(best);
  }

  std::size_t idx(int p, int q) const { return static_cast<std::size_t>(p) * n_ + q; }

  void merge(int a, int b, int keep) {
    const int x = static_cast<int>(t_.parent.size());
    const int ra = comp_root_[a], rb = comp_root_[b];
    const double ca = metric_(label_[ra], keep), cb = metric_(keep, label_[rb]);
    for (int p : members_[a])
      for (int q : members_[b])
        if (fits(p, q, ca + cb)) served_[idx(p, q)] = served_[idx(q, p)] = 1;
    t_.parent.push_back(x);
    t_.children.push_back({ra, rb});
    t_.leaf_point.push_back(kNone);
    label_.push_back(keep);
    propagated_.push_back(keep == propagated_[ra] ? propagated_[rb] : propagated_[ra]);
    t_.parent[ra] = x;
    t_.parent[rb] = x;
    for (int p : members_[a]) up_[p] += ca;
    for (int q : members_[b]) up_[q] += cb;
    for (int q : members_[b]) comp_[q] = a;
    members_[a].insert(members_[a].end(), members_[b].begin(), members_[b].end());
    members_[b].clear();
    comp_root_[a] = x;
    ++stamp_[a];
    ++stamp_[b];
  }

  const MetricOracle& metric_;
  int n_;
  std::vector<char>& served_;  // n x n, symmetric
  double limit_;
  DumbbellTree t_;
  std::vector<int> label_, propagated_;
  std::vector<std::vector<int>> members_;
  std::vector<int> comp_root_;  // per component id: its tree vertex
  std::vector<int> comp_;       // per point: component id
  std::vector<int> stamp_;
  std::vector<double> up_;
  std::priority_queue<Candidate> queue_;
};

}  // namespace detail

// Greedy cover. Each tree starts from singleton leaves and repeatedly
// performs the merge (with the better of the two possible kept labels) that
// serves the most pairs not served by earlier trees. Components left when no
// merge helps are joined in order of increasing pair distance. Every pair is
// then evaluated on the finished tree; trees are added until all pairs are
// served. Each tree serves at least one new pair, so at most n(n-1)/2 trees.
inline DumbbellForest build_dumbbell_forest(const PointSet& points, double eps) {
  if (!(eps > 0)) throw invalid_argument("eps must be > 0");
  const int n = points.size();
  if (n < 1) throw invalid_argument("dumbbell forest needs n >= 1");
  const MetricOracle metric = euclidean_metric(points);
  DumbbellForest forest;
  forest.n = n;
  if (n == 1) {
    DumbbellTree t;
    t.parent = {0};
    t.children = {{}};
    t.leaf_point = {0};
    t.label = {0};
    t.root = 0;
    forest.trees.push_back(std::move(t));
    return forest;
  }

  struct Pair {
    double len;
    int p, q;
  };
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) pairs.push_back({metric(p, q), p, q});
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    if (a.len != b.len) return a.len < b.len;
    return std::make_pair(a.p, a.q) < std::make_pair(b.p, b.q);
  });

  // done[p*n+q]: served by an earlier tree. The builder marks pairs on a
  // copy while growing; the exact evaluation below is what counts.
  std::vector<char> done(static_cast<std::size_t>(n) * n, 0);
  std::size_t remaining = pairs.size();
  while (remaining > 0) {
    std::vector<char> scratch = done;
    detail::ForestTreeBuilder b(metric, scratch, eps);
    b.grow();
    b.link(pairs);
    DumbbellTree t = b.finish();
    const auto walk = leaf_walk_distances(t, metric);
    for (const auto& e : pairs) {
      const std::size_t i = static_cast<std::size_t>(e.p) * n + e.q;
      if (!done[i] && walk[e.p][e.q] <= (1 + eps) * e.len) {
        done[i] = done[static_cast<std::size_t>(e.q) * n + e.p] = 1;
        --remaining;
      }
    }
    forest.trees.push_back(std::move(t));
  }
  return forest;
}

// ---------------------------------------------------------------------------
// Assembly.

// A dumbbell tree as a weighted rooted tree: an edge whose two endpoints share
// a label has weight 0 and is contracted. vertex_label[i] is the point of
// contracted vertex i.
struct LabeledTree {
  RootedWeightedTree tree;
  std::vector<int> vertex_label;
};

inline LabeledTree contract_zero_edges(const DumbbellTree& t, const MetricOracle& metric) {
  const int sz = t.size();
  // Top-down so a contracted child maps to its parent's class.
  std::vector<int> order{t.root};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int c : t.children[order[i]]) order.push_back(c);
  std::vector<int> id(sz, kNone);
  LabeledTree out;
  std::vector<Vertex> parent;
  std::vector<double> weight;
  for (int v : order) {
    if (v != t.root && t.label[v] == t.label[t.parent[v]]) {
      id[v] = id[t.parent[v]];
      continue;
    }
    id[v] = static_cast<int>(parent.size());
    out.vertex_label.push_back(t.label[v]);
    parent.push_back(v == t.root ? id[v] : id[t.parent[v]]);
    weight.push_back(v == t.root ? 0.0 : t.edge_weight(metric, v));
  }
  out.tree = RootedWeightedTree(std::move(parent), std::move(weight));
  return out;
}

enum class TreeSpannerVariant { kLow, kHigh };

struct Translation {
  int tree = 0;
  int a = 0, b = 0;          // points
  double tree_weight = 0.0;  // weight of the replaced tree-spanner edge
  double weight = 0.0;       // metric weight of the translated edge
};

struct AssemblyReport {
  std::vector<int> tree_spanner_degree;  // Δ(H^i)
  std::vector<int> translated_degree;    // Δ of the translated H^i
  std::vector<Translation> translations;
};

// Builds a tree 1-spanner on every tree, maps each edge to the labels of its
// endpoints, and takes the union. Edges whose endpoints share a label vanish.
inline SpannerGraph assemble_from_forest(const MetricOracle& metric, const DumbbellForest& forest,
                                         int k, TreeSpannerVariant variant,
                                         AssemblyReport* report = nullptr) {
  SpannerGraph g(metric.n);
  if (report) *report = {};
  for (int i = 0; i < forest.size(); ++i) {
    const LabeledTree lt = contract_zero_edges(forest.trees[i], metric);
    const SpannerGraph h = variant == TreeSpannerVariant::kLow ? build_tree_low(lt.tree, k)
                                                               : build_tree_high(lt.tree, k);
    SpannerGraph translated(metric.n);
    for (const Edge& e : h.edges()) {
      const int a = lt.vertex_label[e.u], b = lt.vertex_label[e.v];
      if (a == b) continue;
      const double w = metric(a, b);
      translated.add_edge(a, b, w);
      g.add_edge(a, b, w);
      if (report) report->translations.push_back({i, a, b, e.w, w});
    }
    if (report) {
      report->tree_spanner_degree.push_back(max_degree(h));
      report->translated_degree.push_back(max_degree(translated));
    }
  }
  return g;
}

inline std::string variant_name(TreeSpannerVariant v) {
  return v == TreeSpannerVariant::kLow ? "low" : "high";
}

struct EuclidStats {
  int n = 0;
  double eps = 0.0;
  double eps_wspd = 0.0;  // budget spent on WSPD separation (unused by the greedy cover)
  double eps_walk = 0.0;  // budget spent on the representative walk
  int k = 0;
  int m = 0;
  std::size_t edges = 0;
  int max_degree = 0;
  int lambda = 0;
  double lightness = 0.0;
};

// E_k(n): dumbbell forest, then tree spanners assembled over it. Λ is
// measured at stretch 1 + eps.
inline SpannerGraph build_euclid_spanner(const PointSet& points, double eps, int k,
                                         TreeSpannerVariant variant,
                                         EuclidStats* stats = nullptr) {
  const DumbbellForest forest = build_dumbbell_forest(points, eps);
  const MetricOracle metric = euclidean_metric(points);
  SpannerGraph g = assemble_from_forest(metric, forest, k, variant);
  if (stats) {
    stats->n = points.size();
    stats->eps = eps;
    stats->eps_wspd = 0.0;
    stats->eps_walk = eps;
    stats->k = k;
    stats->m = forest.size();
    stats->edges = g.edge_count();
    stats->max_degree = max_degree(g);
    stats->lambda = points.size() > 1 ? hop_diameter(g, metric, 1 + eps) : 0;
    stats->lightness = points.size() > 1 ? lightness(g, metric) : 0.0;
  }
  return g;
}

}  // namespace hopspan
