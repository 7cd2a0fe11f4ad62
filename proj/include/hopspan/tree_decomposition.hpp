#pragma once

// Cut-vertex decomposition of a rooted tree: balanced vertices, Procedure CV,
// the induced tree Q(T, U), and the "path-like" split into residual subtrees
// that touch cut vertices only at their two sentinels.

#include <algorithm>
#include <tuple>
#include <vector>

#include "hopspan/core.hpp"
#include "hopspan/tree_metric.hpp"

namespace hopspan {

// First vertex b on the left-most path from v whose left-most child subtree
// has at most |T_v| - d vertices; kNone if no vertex on the path qualifies.
inline Vertex find_first_balanced(const RootedWeightedTree& tree, Vertex v, int d) {
  if (d < 1) throw invalid_argument("d must be >= 1");
  const int limit = tree.subtree_size(v) - d;
  for (Vertex u = v; !tree.is_leaf(u); u = tree.children(u).front())
    if (tree.subtree_size(tree.children(u).front()) <= limit) return u;
  return kNone;
}

// Procedure CV on a canonicalized tree. Returned in increasing vertex order.
inline std::vector<Vertex> cut_vertices(const RootedWeightedTree& tree, int d) {
  if (d < 1) throw invalid_argument("d must be >= 1");
  if (!is_canonical(tree)) throw invalid_argument("tree must be canonicalized");
  std::vector<Vertex> out;
  if (tree.size() == 0) return out;
  std::vector<Vertex> stack{tree.root()};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (tree.subtree_size(v) < 2 * d) continue;
    const Vertex b = find_first_balanced(tree, v, d);
    out.push_back(b);
    for (Vertex c : tree.children(b)) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Q(T, U): each u in U hangs below its closest proper ancestor in U, with the
// tree distance as edge weight. vertices[i] is the T-vertex of local vertex i;
// local indices follow T's preorder.
struct InducedTree {
  RootedWeightedTree tree;
  std::vector<Vertex> vertices;
};

inline InducedTree induced_tree(const RootedWeightedTree& tree, const std::vector<Vertex>& U) {
  const int n = tree.size();
  std::vector<int> local(n, -1);
  std::vector<char> in_u(n, 0);
  for (Vertex u : U) {
    if (u < 0 || u >= n) throw invalid_argument("vertex out of range");
    in_u[u] = 1;
  }
  if (n == 0 || !in_u[tree.root()]) throw invalid_argument("U must contain the root");

  InducedTree out;
  std::vector<Vertex> parent;
  std::vector<double> weight;
  std::vector<double> root_dist(n, 0.0);
  std::vector<Vertex> nearest(n, kNone);  // closest U-ancestor, inclusive
  for (Vertex v : tree.preorder()) {
    if (v != tree.root()) root_dist[v] = root_dist[tree.parent(v)] + tree.weight(v);
    const Vertex above = v == tree.root() ? kNone : nearest[tree.parent(v)];
    if (in_u[v]) {
      local[v] = static_cast<int>(out.vertices.size());
      out.vertices.push_back(v);
      parent.push_back(above == kNone ? local[v] : local[above]);
      weight.push_back(above == kNone ? 0.0 : root_dist[v] - root_dist[above]);
      nearest[v] = v;
    } else {
      nearest[v] = above;
    }
  }
  out.tree = RootedWeightedTree(std::move(parent), std::move(weight));
  return out;
}

// A connected component of T \ C~. `sentinel` ends the left-most path of T
// that starts at `root` and stays inside the component.
struct ResidualSubtree {
  Vertex root = kNone;
  Vertex sentinel = kNone;
  std::vector<Vertex> vertices;
};

struct Decomposition {
  int d = 0;
  std::vector<Vertex> cut_set;        // C
  std::vector<Vertex> cut_set_tilde;  // C ∪ {rt(T), l(T)}
  std::vector<ResidualSubtree> subtrees;
  InducedTree induced_q;              // Q(T, C~)
};

namespace detail {

// Connected components of T minus `removed`, each listed in preorder.
inline std::vector<ResidualSubtree> residual_components(const RootedWeightedTree& tree,
                                                        const std::vector<char>& removed) {
  std::vector<ResidualSubtree> out;
  std::vector<int> comp(tree.size(), -1);
  for (Vertex v : tree.preorder()) {
    if (removed[v]) continue;
    const Vertex p = tree.parent(v);
    if (v != tree.root() && !removed[p]) {
      comp[v] = comp[p];
    } else {
      comp[v] = static_cast<int>(out.size());
      out.push_back({v, kNone, {}});
    }
    out[comp[v]].vertices.push_back(v);
  }
  for (auto& c : out) {
    Vertex s = c.root;
    while (!tree.is_leaf(s) && !removed[tree.children(s).front()])
      s = tree.children(s).front();
    c.sentinel = s;
  }
  return out;
}

}  // namespace detail

// Cut vertices for threshold d with the two sentinels of T appended. The tree
// is canonicalized first; vertex ids are unchanged.
inline Decomposition decompose(const RootedWeightedTree& input, int d) {
  if (d < 1) throw invalid_argument("d must be >= 1");
  if (input.size() == 0) throw invalid_argument("empty tree");
  const RootedWeightedTree tree = canonicalize_leftmost(input);
  Decomposition out;
  out.d = d;
  out.cut_set = cut_vertices(tree, d);
  std::vector<char> removed(tree.size(), 0);
  for (Vertex c : out.cut_set) removed[c] = 1;
  removed[tree.root()] = 1;
  removed[tree.leftmost_leaf(tree.root())] = 1;
  for (Vertex v = 0; v < tree.size(); ++v)
    if (removed[v]) out.cut_set_tilde.push_back(v);
  out.subtrees = detail::residual_components(tree, removed);
  out.induced_q = induced_tree(tree, out.cut_set_tilde);
  return out;
}

namespace detail {

// A connected vertex set of `tree` as a standalone tree. local index i is
// vertices[i]; the result keeps `tree`'s child order.
struct Extracted {
  RootedWeightedTree tree;
  std::vector<Vertex> vertices;  // into the parent tree
};

inline Extracted extract(const RootedWeightedTree& tree, const std::vector<Vertex>& vertices) {
  std::vector<int> local(tree.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  const int m = static_cast<int>(vertices.size());
  std::vector<Vertex> parent(m);
  std::vector<double> weight(m, 0.0);
  std::vector<std::vector<Vertex>> children(m);
  for (int i = 0; i < m; ++i) {
    const Vertex v = vertices[i];
    const Vertex p = tree.parent(v);
    if (v != tree.root() && local[p] >= 0) {
      parent[i] = local[p];
      weight[i] = tree.weight(v);
    } else {
      parent[i] = i;
    }
    for (Vertex c : tree.children(v))
      if (local[c] >= 0) children[i].push_back(local[c]);
  }
  return {RootedWeightedTree(std::move(parent), std::move(weight), std::move(children)),
          vertices};
}

// A residual piece used by the recursive constructions: its vertices, its
// root, and its bottom sentinel (the vertex whose T-child is a cut below, or
// the left-most leaf when nothing hangs below).
struct Piece {
  std::vector<Vertex> vertices;
  Vertex root = kNone;
  Vertex bottom = kNone;
};

struct Split {
  std::vector<Vertex> cuts;  // sorted
  std::vector<Piece> pieces;
};

// Cut set C ∪ {rt, s} of a canonical tree, closed so that every residual
// piece has at most one vertex with a child among the cuts. When s does not
// lie on the left-most path of its residual component Y, the lowest common
// ancestor of Y's two attachment points is added as well.
inline Split split_with_bottom(const RootedWeightedTree& tree, int d, Vertex s) {
  std::vector<char> removed(tree.size(), 0);
  for (Vertex c : cut_vertices(tree, d)) removed[c] = 1;
  removed[tree.root()] = 1;
  removed[s] = 1;

  auto attachments = [&](const std::vector<char>& rem) {
    // For each component, one entry per T-edge from a component vertex down
    // into the cut set.
    auto comps = residual_components(tree, rem);
    std::vector<std::vector<Vertex>> ports(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (Vertex v : comps[i].vertices)
        for (Vertex c : tree.children(v))
          if (rem[c]) ports[i].push_back(v);
    return std::make_pair(std::move(comps), std::move(ports));
  };

  auto [comps, ports] = attachments(removed);
  bool changed = false;
  const TreeMetric tm(tree);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& p = ports[i];
    if (p.size() < 2) continue;
    if (p.size() > 2) throw Error("internal", "residual component with three attachments");
    removed[tm.lca(p[0], p[1])] = 1;
    changed = true;
  }
  if (changed) std::tie(comps, ports) = attachments(removed);

  Split out;
  for (Vertex v = 0; v < tree.size(); ++v)
    if (removed[v]) out.cuts.push_back(v);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (ports[i].size() > 1) throw Error("internal", "residual component with two attachments");
    out.pieces.push_back({std::move(comps[i].vertices), comps[i].root,
                          ports[i].empty() ? comps[i].sentinel : ports[i][0]});
  }
  return out;
}

}  // namespace detail

}  // namespace hopspan
