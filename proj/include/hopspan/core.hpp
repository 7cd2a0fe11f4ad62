#pragma once

// Shared domain types: point sets, rooted weighted trees, spanner graphs and
// the metric oracle abstraction used by every construction and checker.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace hopspan {

using Vertex = int;
inline constexpr Vertex kNone = -1;

// Error with a stable machine-readable code; the CLI maps codes to exit status.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

inline Error invalid_argument(const std::string& what) {
  return Error("invalid_argument", what);
}

// Relative tolerance 1e-9 with absolute floor 1e-12.
inline constexpr double kRelTol = 1e-9;
inline constexpr double kAbsTol = 1e-12;

inline double tolerance(double reference) {
  return std::max(kAbsTol, kRelTol * std::abs(reference));
}
inline bool approx_eq(double a, double b) {
  return std::abs(a - b) <= tolerance(std::max(std::abs(a), std::abs(b)));
}
inline bool approx_le(double a, double b) { return a <= b + tolerance(b); }

// ---------------------------------------------------------------------------
// PointSet

class PointSet {
 public:
  PointSet() = default;

  // Rejects ragged rows and exact duplicates.
  PointSet(int dim, std::vector<std::vector<double>> rows) : dim_(dim) {
    if (dim < 1) throw invalid_argument("dim must be >= 1");
    coords_.reserve(rows.size() * static_cast<std::size_t>(dim));
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != dim)
        throw invalid_argument("point has " + std::to_string(row.size()) +
                               " coordinates, expected " + std::to_string(dim));
      for (double x : row) {
        if (!std::isfinite(x)) throw invalid_argument("non-finite coordinate");
        coords_.push_back(x);
      }
    }
    check_distinct();
  }

  int dim() const noexcept { return dim_; }
  int size() const noexcept {
    return dim_ == 0 ? 0 : static_cast<int>(coords_.size() / dim_);
  }
  bool empty() const noexcept { return size() == 0; }

  std::span<const double> operator[](int i) const {
    return {coords_.data() + static_cast<std::size_t>(i) * dim_,
            static_cast<std::size_t>(dim_)};
  }

  double distance(int i, int j) const {
    auto a = (*this)[i];
    auto b = (*this)[j];
    double s = 0.0;
    for (int k = 0; k < dim_; ++k) {
      const double t = a[k] - b[k];
      s += t * t;
    }
    return std::sqrt(s);
  }

  bool operator==(const PointSet& o) const {
    return dim_ == o.dim_ && coords_ == o.coords_;
  }

 private:
  void check_distinct() const {
    std::vector<int> order(size());
    std::iota(order.begin(), order.end(), 0);
    auto less = [this](int a, int b) {
      auto pa = (*this)[a];
      auto pb = (*this)[b];
      return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(),
                                          pb.end());
    };
    std::sort(order.begin(), order.end(), less);
    for (std::size_t i = 1; i < order.size(); ++i) {
      auto pa = (*this)[order[i - 1]];
      auto pb = (*this)[order[i]];
      if (std::equal(pa.begin(), pa.end(), pb.begin()))
        throw Error("duplicate_points",
                    "points " + std::to_string(std::min(order[i - 1], order[i])) +
                        " and " + std::to_string(std::max(order[i - 1], order[i])) +
                        " coincide");
    }
  }

  int dim_ = 0;
  std::vector<double> coords_;
};

// ---------------------------------------------------------------------------
// RootedWeightedTree

class RootedWeightedTree {
 public:
  RootedWeightedTree() = default;

  // parent[root] == root; weight[root] is ignored. Children are ordered by
  // increasing vertex index until reordered (see canonicalize_leftmost).
  RootedWeightedTree(std::vector<Vertex> parent, std::vector<double> weight)
      : parent_(std::move(parent)), weight_(std::move(weight)) {
    const int n = static_cast<int>(parent_.size());
    if (static_cast<int>(weight_.size()) != n)
      throw invalid_argument("parent and weight arrays differ in length");
    root_ = kNone;
    children_.assign(n, {});
    for (int v = 0; v < n; ++v) {
      const Vertex p = parent_[v];
      if (p < 0 || p >= n) throw invalid_argument("parent index out of range");
      if (p == v) {
        if (root_ != kNone) throw invalid_argument("tree has more than one root");
        root_ = v;
        weight_[v] = 0.0;
      } else {
        if (!(weight_[v] > 0.0) || !std::isfinite(weight_[v]))
          throw invalid_argument("edge weights must be positive and finite");
        children_[p].push_back(v);
      }
    }
    if (n > 0 && root_ == kNone) throw invalid_argument("tree has no root");
    compute_sizes();
  }

  // Same structure with an explicit child order.
  RootedWeightedTree(std::vector<Vertex> parent, std::vector<double> weight,
                     std::vector<std::vector<Vertex>> children)
      : RootedWeightedTree(std::move(parent), std::move(weight)) {
    for (int v = 0; v < size(); ++v) {
      auto a = children_[v];
      auto b = children[v];
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) throw invalid_argument("child lists disagree with parents");
    }
    children_ = std::move(children);
  }

  int size() const noexcept { return static_cast<int>(parent_.size()); }
  Vertex root() const noexcept { return root_; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  const std::vector<Vertex>& parents() const noexcept { return parent_; }
  const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }
  const std::vector<std::vector<Vertex>>& all_children() const noexcept {
    return children_;
  }
  double weight(Vertex v) const { return weight_[v]; }
  const std::vector<double>& weights() const noexcept { return weight_; }
  int subtree_size(Vertex v) const { return subtree_size_[v]; }
  bool is_leaf(Vertex v) const { return children_[v].empty(); }

  int degree(Vertex v) const {
    return static_cast<int>(children_[v].size()) + (v == root_ ? 0 : 1);
  }
  int max_degree() const {
    int d = 0;
    for (int v = 0; v < size(); ++v) d = std::max(d, degree(v));
    return d;
  }
  double total_weight() const {
    return std::accumulate(weight_.begin(), weight_.end(), 0.0);
  }

  // Preorder following the stored child order.
  std::vector<Vertex> preorder() const {
    std::vector<Vertex> out;
    if (size() == 0) return out;
    out.reserve(size());
    std::vector<Vertex> stack{root_};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      out.push_back(v);
      for (auto it = children_[v].rbegin(); it != children_[v].rend(); ++it)
        stack.push_back(*it);
    }
    return out;
  }

  // End of the path of first children starting at v.
  Vertex leftmost_leaf(Vertex v) const {
    while (!children_[v].empty()) v = children_[v].front();
    return v;
  }

  bool operator==(const RootedWeightedTree& o) const {
    return root_ == o.root_ && parent_ == o.parent_ && weight_ == o.weight_ &&
           children_ == o.children_;
  }

 private:
  void compute_sizes() {
    const int n = size();
    subtree_size_.assign(n, 1);
    if (n == 0) return;
    std::vector<Vertex> order;
    order.reserve(n);
    std::vector<Vertex> stack{root_};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (Vertex c : children_[v]) stack.push_back(c);
    }
    if (static_cast<int>(order.size()) != n)
      throw invalid_argument("parent array is not a single connected tree");
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      if (*it != root_) subtree_size_[parent_[*it]] += subtree_size_[*it];
  }

  Vertex root_ = kNone;
  std::vector<Vertex> parent_;
  std::vector<double> weight_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<int> subtree_size_;
};

// ---------------------------------------------------------------------------
// MetricOracle

struct MetricOracle {
  int n = 0;
  std::function<double(int, int)> dist;

  double operator()(int i, int j) const { return i == j ? 0.0 : dist(i, j); }
};

inline MetricOracle euclidean_metric(std::shared_ptr<const PointSet> points) {
  MetricOracle m;
  m.n = points->size();
  m.dist = [points](int i, int j) { return points->distance(i, j); };
  return m;
}

inline MetricOracle euclidean_metric(const PointSet& points) {
  return euclidean_metric(std::make_shared<const PointSet>(points));
}

// ---------------------------------------------------------------------------
// SpannerGraph

struct Edge {
  Vertex u;
  Vertex v;
  double w;
};

class SpannerGraph {
 public:
  SpannerGraph() = default;
  explicit SpannerGraph(int n) : n_(n), adjacency_(n) {}

  int size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  // Indices into edges() of the edges incident to v.
  const std::vector<int>& incident(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  bool has_edge(Vertex u, Vertex v) const { return keys_.count(key(u, v)) != 0; }

  // Returns false when {u,v} is already present; the first weight is kept.
  bool add_edge(Vertex u, Vertex v, double w) {
    if (u == v) throw invalid_argument("self-loop on vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw invalid_argument("edge endpoint out of range");
    if (!(w >= 0.0) || !std::isfinite(w)) throw invalid_argument("bad edge weight");
    if (!keys_.insert(key(u, v)).second) return false;
    const int id = static_cast<int>(edges_.size());
    edges_.push_back({std::min(u, v), std::max(u, v), w});
    adjacency_[u].push_back(id);
    adjacency_[v].push_back(id);
    return true;
  }

  void merge(const SpannerGraph& other) {
    for (const Edge& e : other.edges_) add_edge(e.u, e.v, e.w);
  }

  double total_weight() const {
    double s = 0.0;
    for (const Edge& e : edges_) s += e.w;
    return s;
  }

  // Throws when some stored weight differs from the metric distance.
  void check_weights(const MetricOracle& metric) const {
    for (const Edge& e : edges_)
      if (!approx_eq(e.w, metric(e.u, e.v)))
        throw Error("bad_weight", "edge (" + std::to_string(e.u) + "," +
                                      std::to_string(e.v) +
                                      ") weight differs from metric distance");
  }

 private:
  static std::uint64_t key(Vertex u, Vertex v) {
    const auto a = static_cast<std::uint64_t>(std::min(u, v));
    const auto b = static_cast<std::uint64_t>(std::max(u, v));
    return (a << 32) | b;
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::unordered_set<std::uint64_t> keys_;
};

}  // namespace hopspan
