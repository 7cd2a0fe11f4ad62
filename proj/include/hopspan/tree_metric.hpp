#pragma once

#include <memory>
#include <vector>

#include "hopspan/core.hpp"

namespace hopspan {

// Exact tree distances: LCA by binary lifting plus root-distance prefix sums.
class TreeMetric {
 public:
  explicit TreeMetric(const RootedWeightedTree& tree) : n_(tree.size()) {
    root_dist_.assign(n_, 0.0);
    depth_.assign(n_, 0);
    tin_.assign(n_, 0);
    tout_.assign(n_, 0);
    int levels = 1;
    while ((1 << levels) < std::max(n_, 1)) ++levels;
    up_.assign(levels, std::vector<Vertex>(n_, tree.root()));
    if (n_ == 0) return;

    int timer = 0;
    std::vector<std::pair<Vertex, std::size_t>> stack{{tree.root(), 0}};
    tin_[tree.root()] = timer++;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& ch = tree.children(v);
      if (next < ch.size()) {
        const Vertex c = ch[next++];
        up_[0][c] = v;
        depth_[c] = depth_[v] + 1;
        root_dist_[c] = root_dist_[v] + tree.weight(c);
        tin_[c] = timer++;
        stack.push_back({c, 0});
      } else {
        tout_[v] = timer++;
        stack.pop_back();
      }
    }
    for (int j = 1; j < levels; ++j)
      for (int v = 0; v < n_; ++v) up_[j][v] = up_[j - 1][up_[j - 1][v]];
  }

  int size() const noexcept { return n_; }

  bool is_ancestor(Vertex a, Vertex v) const {
    return tin_[a] <= tin_[v] && tout_[v] <= tout_[a];
  }
  bool comparable(Vertex a, Vertex b) const {
    return is_ancestor(a, b) || is_ancestor(b, a);
  }

  Vertex lca(Vertex a, Vertex b) const {
    if (is_ancestor(a, b)) return a;
    if (is_ancestor(b, a)) return b;
    for (int j = static_cast<int>(up_.size()) - 1; j >= 0; --j)
      if (!is_ancestor(up_[j][a], b)) a = up_[j][a];
    return up_[0][a];
  }

  double dist(Vertex a, Vertex b) const {
    if (a == b) return 0.0;
    return root_dist_[a] + root_dist_[b] - 2.0 * root_dist_[lca(a, b)];
  }

  double root_distance(Vertex v) const { return root_dist_[v]; }
  int depth(Vertex v) const { return depth_[v]; }

 private:
  int n_;
  std::vector<double> root_dist_;
  std::vector<int> depth_;
  std::vector<int> tin_, tout_;
  std::vector<std::vector<Vertex>> up_;
};

inline MetricOracle tree_metric(const RootedWeightedTree& tree) {
  auto tm = std::make_shared<const TreeMetric>(tree);
  MetricOracle m;
  m.n = tree.size();
  m.dist = [tm](int a, int b) { return tm->dist(a, b); };
  return m;
}

// Reorders every child list so the first child has the largest subtree;
// ties go to the smaller vertex index.
inline RootedWeightedTree canonicalize_leftmost(const RootedWeightedTree& tree) {
  auto children = tree.all_children();
  for (auto& ch : children)
    std::sort(ch.begin(), ch.end(), [&](Vertex a, Vertex b) {
      if (tree.subtree_size(a) != tree.subtree_size(b))
        return tree.subtree_size(a) > tree.subtree_size(b);
      return a < b;
    });
  return RootedWeightedTree(tree.parents(), tree.weights(), std::move(children));
}

inline bool is_canonical(const RootedWeightedTree& tree) {
  for (int v = 0; v < tree.size(); ++v) {
    const auto& ch = tree.children(v);
    for (std::size_t i = 1; i < ch.size(); ++i)
      if (tree.subtree_size(ch[i]) > tree.subtree_size(ch[0])) return false;
  }
  return true;
}

// The path v0 - v1 - ... - v(n-1) rooted at v0 with the given gaps.
inline RootedWeightedTree path_tree(const std::vector<double>& coords) {
  const int n = static_cast<int>(coords.size());
  std::vector<Vertex> parent(n);
  std::vector<double> w(n, 0.0);
  for (int i = 0; i < n; ++i) {
    parent[i] = i == 0 ? 0 : i - 1;
    if (i > 0) w[i] = coords[i] - coords[i - 1];
  }
  return RootedWeightedTree(std::move(parent), std::move(w));
}

}  // namespace hopspan
