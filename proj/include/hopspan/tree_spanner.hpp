#pragma once

// 1-spanners for tree metrics: the shortcutting subroutine used on small
// trees, the low-diameter construction (degree Δ(T)+2k) and the
// high-diameter construction (degree 2Δ(T), load O(log_k n)); plus the load
// functional and monotone hop diameters.

#include <algorithm>
#include <deque>
#include <numeric>
#include <vector>

#include "hopspan/core.hpp"
#include "hopspan/tree_decomposition.hpp"
#include "hopspan/tree_metric.hpp"

namespace hopspan {

// ---------------------------------------------------------------------------
// Shortcutting subroutine.
//
// A piece is a connected vertex set S with top t and an optional bottom b
// below t. Let c be a centroid of S and j the lowest vertex of the t-b path
// that is an ancestor of c (j = t without a bottom). The edges (t,j), (j,b),
// (j,c), (t,c) are added and the pieces of S \ {j,c} are handled
// recursively; the piece above j takes parent(j) as its bottom, the piece
// holding b keeps b, and the piece holding parent(c) takes it as bottom.
// Every piece has at most |S|/2 vertices.

namespace detail {

struct SubTask {
  std::vector<Vertex> vertices;  // preorder of the host tree
  Vertex top;
  Vertex bottom;
};

// Adds the shortcut edges for tree q to g; `ids` maps q-vertices to g-vertices
// and `w` gives the exact weight of a pair of q-vertices.
template <typename WeightFn>
void add_tree_shortcuts(SpannerGraph& g, const RootedWeightedTree& q,
                        const std::vector<Vertex>& ids, const WeightFn& w) {
  const int n = q.size();
  if (n == 0) return;
  for (Vertex v = 0; v < n; ++v)
    if (v != q.root()) g.add_edge(ids[v], ids[q.parent(v)], w(v, q.parent(v)));

  std::vector<int> owner(n, -1);
  std::vector<int> size(n, 0);
  std::vector<char> on_spine(n, 0);
  std::vector<int> position_piece(n, -1);
  int stamp = 0;
  std::vector<SubTask> stack;
  stack.push_back({q.preorder(), q.root(), kNone});
  auto link = [&](Vertex a, Vertex b) {
    if (a != kNone && b != kNone && a != b) g.add_edge(ids[a], ids[b], w(a, b));
  };

  while (!stack.empty()) {
    SubTask task = std::move(stack.back());
    stack.pop_back();
    const int m = static_cast<int>(task.vertices.size());
    if (m <= 2) continue;
    const int id = stamp++;
    for (Vertex v : task.vertices) {
      owner[v] = id;
      size[v] = 1;
    }
    for (auto it = task.vertices.rbegin(); it != task.vertices.rend(); ++it)
      if (*it != task.top) size[q.parent(*it)] += size[*it];

    Vertex c = task.top;
    for (bool moved = true; moved;) {
      moved = false;
      for (Vertex ch : q.children(c))
        if (owner[ch] == id && 2 * size[ch] > m) {
          c = ch;
          moved = true;
          break;
        }
    }

    Vertex j = task.top;
    if (task.bottom != kNone) {
      for (Vertex v = task.bottom;; v = q.parent(v)) {
        on_spine[v] = 1;
        if (v == task.top) break;
      }
      j = c;
      while (!on_spine[j]) j = q.parent(j);
      for (Vertex v = task.bottom;; v = q.parent(v)) {
        on_spine[v] = 0;
        if (v == task.top) break;
      }
    }
    link(task.top, j);
    link(j, task.bottom);
    link(j, c);
    link(task.top, c);

    // Residual pieces in preorder; a vertex starts a new piece when its
    // parent is outside S or removed.
    std::vector<SubTask> pieces;
    for (Vertex v : task.vertices) {
      if (v == j || v == c) continue;
      const Vertex p = q.parent(v);
      int pid;
      if (v != task.top && owner[p] == id && p != j && p != c) {
        pid = position_piece[p];
      } else {
        pid = static_cast<int>(pieces.size());
        pieces.push_back({{}, v, kNone});
      }
      position_piece[v] = pid;
      pieces[pid].vertices.push_back(v);
    }
    auto assign_bottom = [&](Vertex v) {
      if (v != kNone && v != j && v != c && owner[v] == id) {
        auto& piece = pieces[position_piece[v]];
        if (piece.bottom == kNone) piece.bottom = v;
      }
    };
    assign_bottom(task.bottom);
    if (j != task.top) assign_bottom(q.parent(j));
    if (c != j) assign_bottom(q.parent(c));
    for (Vertex v : task.vertices) owner[v] = -1;
    for (auto& piece : pieces) stack.push_back(std::move(piece));
  }
}

}  // namespace detail

inline SpannerGraph build_tree_spanner_sub(const RootedWeightedTree& q) {
  SpannerGraph g(q.size());
  if (q.size() == 0) return g;
  const TreeMetric tm(q);
  std::vector<Vertex> ids(q.size());
  std::iota(ids.begin(), ids.end(), 0);
  detail::add_tree_shortcuts(g, q, ids, [&](Vertex a, Vertex b) { return tm.dist(a, b); });
  return g;
}

namespace detail {

inline int floor_log2(long long m) {
  int r = 0;
  while ((2LL << r) <= m) ++r;
  return r;
}

}  // namespace detail

// Radius of the subroutine (top to any vertex, bottom to any ancestor):
// R(1) = 0, R(2) = 1, R(m) = 2 + R(floor(m/2)).
inline int sub_radius_bound(int m) {
  if (m <= 1) return 0;
  if (m == 2) return 1;
  return 2 + sub_radius_bound(m / 2);
}

// Comparable monotone diameter of the subroutine:
// D(1) = 0, D(2) = 1, D(m) = max(D(floor(m/2)), 3 + 2 R(floor(m/2))).
inline int sub_diameter_bound(int m) {
  if (m <= 1) return 0;
  if (m == 2) return 1;
  return std::max(sub_diameter_bound(m / 2), 3 + 2 * sub_radius_bound(m / 2));
}

// Per-vertex degree increase of the subroutine: 3 (floor(log2 m) + 1).
inline int sub_degree_bound(int m) { return m <= 1 ? 0 : 3 * (detail::floor_log2(m) + 1); }

// Edges of the subroutine including the tree edges: at most 5m.
inline constexpr int kSubEdgeFactor = 5;

// ---------------------------------------------------------------------------
// Recursive constructions.

struct TreeBuildOptions {
  // Low variant: the bottom sentinel is joined only to its ancestor cuts.
  bool leaf_ancestors_only = true;
};

struct TreeBuildInfo {
  int k_requested = 0;
  int k_used = 0;
  bool clamped = false;
  int levels = 0;          // recursion levels that selected cut vertices
  int max_cut_set = 0;     // largest |C~| over all levels
  std::vector<Edge> top_level_edges;  // non-T edges added at the first level
};

// Valid k for the low construction on n vertices: [4, n/2 - 1], or 4 when
// that range is empty.
inline int clamp_tree_k(int n, int k) {
  const int hi = n / 2 - 1;
  return std::max(4, std::min(k, hi));
}

namespace detail {

enum class TreeVariant { kLow, kHigh };

struct TreeBuilder {
  const RootedWeightedTree& tree;
  const TreeMetric metric;
  int k;
  TreeVariant variant;
  TreeBuildOptions options;
  SpannerGraph graph;
  TreeBuildInfo* info;

  TreeBuilder(const RootedWeightedTree& t, int k_, TreeVariant v, TreeBuildOptions opt,
              TreeBuildInfo* inf)
      : tree(t), metric(t), k(k_), variant(v), options(opt), graph(t.size()), info(inf) {}

  void add(Vertex a, Vertex b, bool top) {
    if (a == b) return;
    const double w = metric.dist(a, b);
    const bool added = graph.add_edge(a, b, w);
    const bool tree_edge = tree.parent(a) == b || tree.parent(b) == a;
    if (top && info && (added || tree_edge))
      info->top_level_edges.push_back({std::min(a, b), std::max(a, b), w});
  }

  void run() {
    for (Vertex v = 0; v < tree.size(); ++v)
      if (v != tree.root()) graph.add_edge(v, tree.parent(v), tree.weight(v));
    const RootedWeightedTree canon = canonicalize_leftmost(tree);
    std::vector<Vertex> ids(tree.size());
    std::iota(ids.begin(), ids.end(), 0);
    recurse(canon, ids, canon.leftmost_leaf(canon.root()), 0);
  }

  // `sub` is canonical, ids maps its vertices to tree vertices, s is the
  // bottom sentinel.
  void recurse(const RootedWeightedTree& sub, const std::vector<Vertex>& ids, Vertex s,
               int depth) {
    const int n = sub.size();
    if (n <= 1) return;
    const bool top = depth == 0;
    const TreeMetric local(sub);
    if (n < 2 * k + 2) {
      if (variant == TreeVariant::kHigh) return;
      add_tree_shortcuts_mapped(sub, ids, top);
      for (Vertex v = 0; v < n; ++v) {
        add(ids[sub.root()], ids[v], top);
        if (!options.leaf_ancestors_only || local.is_ancestor(v, s)) add(ids[s], ids[v], top);
      }
      return;
    }
    const int d = (n + k - 1) / k;
    const Split split = split_with_bottom(sub, d, s);
    if (info) {
      info->levels = std::max(info->levels, depth + 1);
      info->max_cut_set = std::max(info->max_cut_set, static_cast<int>(split.cuts.size()));
    }
    const InducedTree q = induced_tree(sub, split.cuts);
    std::vector<Vertex> qids(q.vertices.size());
    for (std::size_t i = 0; i < q.vertices.size(); ++i) qids[i] = ids[q.vertices[i]];
    if (variant == TreeVariant::kHigh) {
      for (Vertex v = 0; v < q.tree.size(); ++v)
        if (v != q.tree.root()) add(qids[v], qids[q.tree.parent(v)], top);
    } else {
      add_tree_shortcuts_mapped(q.tree, qids, top);
      for (Vertex c : split.cuts) {
        add(ids[sub.root()], ids[c], top);
        if (!options.leaf_ancestors_only || local.is_ancestor(c, s)) add(ids[s], ids[c], top);
      }
    }
    for (const Piece& piece : split.pieces) {
      Extracted ex = extract(sub, piece.vertices);
      RootedWeightedTree canon = canonicalize_leftmost(ex.tree);
      std::vector<Vertex> child_ids(ex.vertices.size());
      Vertex bottom = kNone;
      for (std::size_t i = 0; i < ex.vertices.size(); ++i) {
        child_ids[i] = ids[ex.vertices[i]];
        if (ex.vertices[i] == piece.bottom) bottom = static_cast<Vertex>(i);
      }
      recurse(canon, child_ids, bottom, depth + 1);
    }
  }

  void add_tree_shortcuts_mapped(const RootedWeightedTree& q, const std::vector<Vertex>& ids,
                                 bool top) {
    SpannerGraph scratch(q.size());
    std::vector<Vertex> local_ids(q.size());
    std::iota(local_ids.begin(), local_ids.end(), 0);
    add_tree_shortcuts(scratch, q, local_ids,
                       [&](Vertex a, Vertex b) { return metric.dist(ids[a], ids[b]); });
    for (const Edge& e : scratch.edges()) add(ids[e.u], ids[e.v], top);
  }
};

}  // namespace detail

// Low-diameter construction. k is clamped to [4, n/2 - 1] (see clamp_tree_k).
inline SpannerGraph build_tree_low(const RootedWeightedTree& tree, int k,
                                   const TreeBuildOptions& options = {},
                                   TreeBuildInfo* info = nullptr) {
  if (tree.size() == 0) throw invalid_argument("tree must have n >= 1");
  if (k < 2) throw invalid_argument("k must be >= 2");
  const int used = clamp_tree_k(tree.size(), k);
  if (info) {
    *info = {};
    info->k_requested = k;
    info->k_used = used;
    info->clamped = used != k;
  }
  detail::TreeBuilder b(tree, used, detail::TreeVariant::kLow, options, info);
  b.run();
  return std::move(b.graph);
}

// Cut-vertex parameter actually used by the high construction: k below 4
// would not shrink the residual pieces, so it is raised to 4.
inline int high_tree_k(int k) { return std::max(k, 4); }

// High-diameter construction: the edges of Q~ at every level.
inline SpannerGraph build_tree_high(const RootedWeightedTree& tree, int k,
                                    TreeBuildInfo* info = nullptr) {
  if (tree.size() == 0) throw invalid_argument("tree must have n >= 1");
  if (k < 2) throw invalid_argument("k must be >= 2");
  const int used = high_tree_k(k);
  if (info) {
    *info = {};
    info->k_requested = k;
    info->k_used = used;
    info->clamped = used != k;
  }
  detail::TreeBuilder b(tree, used, detail::TreeVariant::kHigh, {}, info);
  b.run();
  return std::move(b.graph);
}

// ---------------------------------------------------------------------------
// Bounds instantiated from the construction recurrences. m' = 2 ceil(n/k) - 1
// bounds every residual piece; |C~| <= k + 2 (C, both sentinels, and at most
// one closing vertex).

namespace detail {

inline int residual_bound(int n, int k) { return 2 * ((n + k - 1) / k) - 1; }

template <typename Step>
int tree_envelope(int n, Step step) {
  std::vector<int> env(n + 1, 0);
  for (int m = 1; m <= n; ++m) env[m] = std::max(env[m - 1], step(m, env));
  return env[n];
}

}  // namespace detail

// Root and bottom-sentinel radius of the low construction:
// R(q) = 1 for 2 <= q < 2k+2, R(n) = 2 + R(m').
inline int tree_low_radius_bound(int n, int k) {
  return detail::tree_envelope(n, [k](int m, const std::vector<int>& env) {
    if (m <= 1) return 0;
    if (m < 2 * k + 2) return 1;
    return 2 + env[detail::residual_bound(m, k)];
  });
}

// Λ̄(q) = D(q) for q < 2k+2, Λ̄(n) = max(Λ̄(m'), 2 + D(k+2) + 2 R(m')).
inline int tree_low_lambda_bound(int n, int k) {
  int dsub = 0;
  for (int m = 1; m <= k + 2; ++m) dsub = std::max(dsub, sub_diameter_bound(m));
  return detail::tree_envelope(n, [&](int m, const std::vector<int>& env) {
    if (m <= 1) return 0;
    if (m < 2 * k + 2) {
      int d = 0;
      for (int x = 1; x <= m; ++x) d = std::max(d, sub_diameter_bound(x));
      return d;
    }
    const int r = detail::residual_bound(m, k);
    return std::max(env[r], 2 + dsub + 2 * tree_low_radius_bound(r, k));
  });
}

// R'(q) = q - 1 for q < 2k+2, R'(n) = (k + 1) + 1 + R'(m').
inline int tree_high_radius_bound(int n, int k) {
  return detail::tree_envelope(n, [k](int m, const std::vector<int>& env) {
    if (m <= 1) return 0;
    if (m < 2 * k + 2) return m - 1;
    return k + 2 + env[detail::residual_bound(m, k)];
  });
}

// Λ̄'(q) = q - 1 for q < 2k+2, Λ̄'(n) = max(Λ̄'(m'), (k + 1) + 2 + 2 R'(m')).
inline int tree_high_lambda_bound(int n, int k) {
  return detail::tree_envelope(n, [k](int m, const std::vector<int>& env) {
    if (m <= 1) return 0;
    if (m < 2 * k + 2) return m - 1;
    const int r = detail::residual_bound(m, k);
    return std::max(env[r], k + 3 + 2 * tree_high_radius_bound(r, k));
  });
}

// Levels of the recursion that select cut vertices: L(q) = 0 for q < 2k+2,
// L(n) = 1 + L(m').
inline int tree_levels_bound(int n, int k) {
  return detail::tree_envelope(n, [k](int m, const std::vector<int>& env) {
    if (m < 2 * k + 2) return 0;
    return 1 + env[detail::residual_bound(m, k)];
  });
}

// ---------------------------------------------------------------------------
// Load and monotone diameters.

struct LoadReport {
  std::vector<int> per_edge;  // indexed by the child endpoint; root entry unused
  int max_load = 0;
  double spanner_weight = 0.0;
  double load_weight = 0.0;  // Σ χ(e) w(e)
  bool identity_holds = false;
};

inline LoadReport compute_load(const RootedWeightedTree& tree, const SpannerGraph& h) {
  if (h.size() > tree.size()) throw invalid_argument("spanner has more vertices than the tree");
  const TreeMetric tm(tree);
  std::vector<long long> acc(tree.size(), 0);
  for (const Edge& e : h.edges()) {
    ++acc[e.u];
    ++acc[e.v];
    acc[tm.lca(e.u, e.v)] -= 2;
  }
  const auto order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (*it != tree.root()) acc[tree.parent(*it)] += acc[*it];
  LoadReport r;
  r.per_edge.assign(tree.size(), 0);
  for (Vertex v = 0; v < tree.size(); ++v) {
    if (v == tree.root()) continue;
    r.per_edge[v] = static_cast<int>(acc[v]);
    r.max_load = std::max(r.max_load, r.per_edge[v]);
    r.load_weight += r.per_edge[v] * tree.weight(v);
  }
  r.spanner_weight = h.total_weight();
  r.identity_holds = approx_eq(r.spanner_weight, r.load_weight);
  return r;
}

struct MonotoneDiameter {
  int lambda_bar = 0;  // comparable pairs
  int lambda = 0;      // all pairs
};

// Minimum hop counts over exact-weight paths, by breadth-first search along
// the edges that are tight for each source. Throws "not_one_spanner" when
// some pair has no exact path.
inline MonotoneDiameter monotone_diameter(const RootedWeightedTree& tree, const SpannerGraph& h) {
  const int n = tree.size();
  if (h.size() != n) throw invalid_argument("spanner and tree differ in vertex count");
  const TreeMetric tm(tree);
  MonotoneDiameter out;
  std::vector<int> hops(n);
  std::deque<Vertex> queue;
  for (Vertex src = 0; src < n; ++src) {
    std::fill(hops.begin(), hops.end(), -1);
    hops[src] = 0;
    queue.assign(1, src);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      const double dx = tm.dist(src, x);
      for (int id : h.incident(x)) {
        const Edge& e = h.edges()[id];
        const Vertex y = e.u == x ? e.v : e.u;
        if (hops[y] >= 0) continue;
        const double dy = tm.dist(src, y);
        if (std::abs(dx + e.w - dy) <= tolerance(dy)) {
          hops[y] = hops[x] + 1;
          queue.push_back(y);
        }
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      if (hops[v] < 0)
        throw Error("not_one_spanner", "no exact path between " + std::to_string(src) +
                                           " and " + std::to_string(v));
      out.lambda = std::max(out.lambda, hops[v]);
      if (tm.comparable(src, v)) out.lambda_bar = std::max(out.lambda_bar, hops[v]);
    }
  }
  return out;
}

}  // namespace hopspan
