#pragma once

// Independent checkers shared by the unit tests and the acceptance runner.

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "hopspan/tree_decomposition.hpp"
#include "hopspan/tree_metric.hpp"
#include "hopspan/wspd.hpp"

namespace checks {

using namespace hopspan;

// The 18-vertex example tree, vertex v_i stored at index i-1.
inline RootedWeightedTree figure_tree() {
  std::vector<Vertex> parent(18);
  auto link = [&](int child, int par) { parent[child - 1] = par - 1; };
  parent[0] = 0;
  link(2, 1);
  link(17, 1);
  link(18, 1);
  link(3, 2);
  link(15, 2);
  link(16, 15);
  for (int v = 4; v <= 8; ++v) link(v, v - 1);
  link(9, 8);
  link(12, 8);
  link(10, 9);
  link(11, 9);
  link(13, 12);
  link(14, 12);
  return RootedWeightedTree(parent, std::vector<double>(18, 1.0));
}

// Checks the structural guarantees of one decomposition. Returns a message
// for the first violation, empty when all hold.
inline std::string check_decomposition(const RootedWeightedTree& input, int d) {
  const auto t = canonicalize_leftmost(input);
  const int n = t.size();
  const auto dec = decompose(input, d);
  const std::set<Vertex> cuts(dec.cut_set.begin(), dec.cut_set.end());
  const std::set<Vertex> tilde(dec.cut_set_tilde.begin(), dec.cut_set_tilde.end());

  if (n >= 2 * d && static_cast<int>(cuts.size()) > n / d - 1) return "too many cuts";
  if (n < 2 * d && !cuts.empty()) return "cv should be empty";

  // Components of T minus C and of T minus C~.
  std::vector<char> in_c(n, 0);
  for (Vertex c : cuts) in_c[c] = 1;
  for (const auto& comp : detail::residual_components(t, in_c))
    if (static_cast<int>(comp.vertices.size()) >= 2 * d) return "component of size >= 2d";

  // Partition.
  std::vector<int> seen(n, 0);
  for (Vertex v : tilde) ++seen[v];
  for (const auto& s : dec.subtrees) {
    if (static_cast<int>(s.vertices.size()) >= 2 * d) return "residual subtree of size >= 2d";
    for (Vertex v : s.vertices) ++seen[v];
  }
  for (int v = 0; v < n; ++v)
    if (seen[v] != 1) return "not a partition";

  // Q~ spans C~, rooted at rt(T), and child counts do not grow.
  const auto& q = dec.induced_q;
  if (q.tree.size() != static_cast<int>(tilde.size())) return "Q size";
  if (q.vertices[q.tree.root()] != t.root()) return "Q root";
  for (int i = 0; i < q.tree.size(); ++i) {
    if (q.tree.children(i).size() > t.children(q.vertices[i]).size()) return "induced tree: child count grew";
    if (q.tree.degree(i) > t.degree(q.vertices[i])) return "induced tree: degree grew";
  }
  if (q.tree.max_degree() > t.max_degree()) return "induced tree: max degree grew";

  // Only the root and the sentinel of a residual subtree have
  // T-edges into C~, one each, parent and left-most child respectively.
  for (const auto& s : dec.subtrees) {
    const std::set<Vertex> mine(s.vertices.begin(), s.vertices.end());
    int root_edges = 0, sentinel_edges = 0;
    for (Vertex v : s.vertices) {
      std::vector<Vertex> nbrs = t.children(v);
      if (v != t.root()) nbrs.push_back(t.parent(v));
      for (Vertex u : nbrs) {
        if (!tilde.count(u)) continue;
        if (v == s.root && u == t.parent(v)) {
          ++root_edges;
        } else if (v == s.sentinel && !t.is_leaf(v) && u == t.children(v).front()) {
          ++sentinel_edges;
        } else {
          return "vertex " + std::to_string(v) + " touches cut " + std::to_string(u);
        }
      }
    }
    if (root_edges > 1 || sentinel_edges > 1) return "sentinel with two cut edges";
    if (!mine.count(s.sentinel)) return "sentinel outside its subtree";
  }
  return {};
}

inline double dist_to(const PointSet& p, int i, const std::vector<double>& c) {
  double s = 0;
  for (int a = 0; a < p.dim(); ++a) s += (p[i][a] - c[a]) * (p[i][a] - c[a]);
  return std::sqrt(s);
}

// Re-verifies both WSPD axioms from raw coordinates. Returns the first
// violation, empty when none.
inline std::string check_wspd(const PointSet& p, const SplitTree& tree, const Wspd& w) {
  const int n = p.size();
  std::vector<int> cover(static_cast<std::size_t>(n) * n, 0);
  for (const auto& pair : w.pairs) {
    const auto& a = tree[pair.u].points;
    const auto& b = tree[pair.v].points;
    if (a.empty() || b.empty()) return "empty side";
    for (int i : a)
      if (dist_to(p, i, pair.center_u) > pair.radius * (1 + 1e-9) + 1e-12) return "u outside ball";
    for (int j : b)
      if (dist_to(p, j, pair.center_v) > pair.radius * (1 + 1e-9) + 1e-12) return "v outside ball";
    double gap = 0;
    for (int x = 0; x < p.dim(); ++x)
      gap += (pair.center_u[x] - pair.center_v[x]) * (pair.center_u[x] - pair.center_v[x]);
    if (std::sqrt(gap) - 2 * pair.radius < w.s * pair.radius * (1 - 1e-9)) return "not separated";
    for (int i : a)
      for (int j : b) {
        ++cover[static_cast<std::size_t>(std::min(i, j)) * n + std::max(i, j)];
      }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (cover[static_cast<std::size_t>(i) * n + j] != 1)
        return "pair " + std::to_string(i) + "," + std::to_string(j) + " covered " +
               std::to_string(cover[static_cast<std::size_t>(i) * n + j]) + " times";
  return {};
}

}  // namespace checks
