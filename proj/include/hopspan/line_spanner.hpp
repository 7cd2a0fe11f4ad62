#pragma once

// 1-spanners for points on a line: cut selection, the list-spanner subroutine,
// the low-diameter construction (degree k+2) and the high-diameter
// construction (degree 4, lightness O(log_k n)).

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "hopspan/core.hpp"

namespace hopspan {

class LineInstance {
 public:
  explicit LineInstance(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw invalid_argument("line instance needs n >= 1");
    for (std::size_t i = 1; i < coords_.size(); ++i)
      if (!(coords_[i] > coords_[i - 1]))
        throw invalid_argument("line coordinates must be strictly increasing");
  }

  // The metric on positions 1..n.
  static LineInstance uniform(int n) {
    std::vector<double> c(n);
    for (int i = 0; i < n; ++i) c[i] = i + 1;
    return LineInstance(std::move(c));
  }

  // Sorts the first coordinate of every point; rejects repeated values.
  static LineInstance from_points(const PointSet& points) {
    std::vector<double> c;
    for (int i = 0; i < points.size(); ++i) c.push_back(points[i][0]);
    std::sort(c.begin(), c.end());
    return LineInstance(std::move(c));
  }

  int size() const noexcept { return static_cast<int>(coords_.size()); }
  const std::vector<double>& coords() const noexcept { return coords_; }
  double distance(int i, int j) const { return std::abs(coords_[i] - coords_[j]); }

  MetricOracle metric() const {
    MetricOracle m;
    m.n = size();
    m.dist = [c = coords_](int i, int j) { return std::abs(c[i] - c[j]); };
    return m;
  }

 private:
  std::vector<double> coords_;
};

enum class ListSpannerKind { kBalanced, kHierarchical };

inline ListSpannerKind parse_list_kind(const std::string& s) {
  if (s == "balanced") return ListSpannerKind::kBalanced;
  if (s == "hier" || s == "hierarchical") return ListSpannerKind::kHierarchical;
  throw invalid_argument("unknown list-spanner kind '" + s + "'");
}

// Zero-based positions of r_0 = v_1, r_i = v_{i*ceil(n/k)} (clamped), r_k = v_n.
inline std::vector<int> select_cuts_1d(int n, int k) {
  if (k < 2) throw invalid_argument("k must be >= 2");
  if (n < 2) throw invalid_argument("n must be >= 2");
  const int step = (n + k - 1) / k;
  std::vector<int> cuts{0};
  for (int i = 1; i < k; ++i) {
    const int pos = std::min(i * step, n) - 1;
    if (pos > cuts.back()) cuts.push_back(pos);
  }
  if (cuts.back() != n - 1) cuts.push_back(n - 1);
  return cuts;
}

namespace detail {

inline constexpr int kHierarchyLevels = 3;

inline int ceil_log2(long long m) {
  int r = 0;
  while ((1LL << r) < m) ++r;
  return r;
}

// Adds list-spanner edges among `order`, whose entries appear left to right.
template <typename WeightFn>
void add_balanced(SpannerGraph& g, const std::vector<Vertex>& order, int lo, int hi,
                  const WeightFn& w) {
  if (hi <= lo) return;
  if (hi - lo == 1) {
    g.add_edge(order[lo], order[hi], w(order[lo], order[hi]));
    return;
  }
  const int mid = lo + (hi - lo) / 2;
  g.add_edge(order[lo], order[mid], w(order[lo], order[mid]));
  g.add_edge(order[mid], order[hi], w(order[mid], order[hi]));
  add_balanced(g, order, lo, mid, w);
  add_balanced(g, order, mid, hi, w);
}

template <typename WeightFn>
void add_hierarchical(SpannerGraph& g, const std::vector<Vertex>& order, int level,
                      const WeightFn& w) {
  const int m = static_cast<int>(order.size());
  if (level == 0 || m <= 4) {
    add_balanced(g, order, 0, m - 1, w);
    return;
  }
  const int block = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(m))));
  std::vector<Vertex> boundary;
  for (int start = 0; start < m; start += block) {
    const int end = std::min(m, start + block) - 1;
    std::vector<Vertex> inner(order.begin() + start, order.begin() + end + 1);
    for (int i = start + 1; i < end; ++i) {
      g.add_edge(order[start], order[i], w(order[start], order[i]));
      g.add_edge(order[i], order[end], w(order[i], order[end]));
    }
    boundary.push_back(order[start]);
    if (end != start) boundary.push_back(order[end]);
    add_hierarchical(g, inner, level - 1, w);
  }
  add_hierarchical(g, boundary, level - 1, w);
}

}  // namespace detail

// Adds a 1-spanner of the line metric restricted to `order` (listed left to
// right) to g.
template <typename WeightFn>
void add_list_spanner(SpannerGraph& g, const std::vector<Vertex>& order,
                      const WeightFn& w,
                      ListSpannerKind kind = ListSpannerKind::kBalanced) {
  if (order.size() < 2) return;
  if (kind == ListSpannerKind::kBalanced)
    detail::add_balanced(g, order, 0, static_cast<int>(order.size()) - 1, w);
  else
    detail::add_hierarchical(g, order, detail::kHierarchyLevels, w);
}

// Hop bound of the list spanner on m points.
//  balanced:      2*ceil(log2 m)
//  hierarchical:  H(m, 3) with H(m, 0) = balanced(m), H(m, L) = balanced(m)
//                 for m <= 4, else max(H(b, L-1), 2 + H(2*ceil(m/b), L-1)),
//                 b = ceil(sqrt m); taken as a running maximum over m' <= m.
inline int list_hop_bound(int m, ListSpannerKind kind = ListSpannerKind::kBalanced) {
  if (m <= 1) return 0;
  if (kind == ListSpannerKind::kBalanced) return 2 * detail::ceil_log2(m);
  static std::map<std::pair<int, int>, int> memo;
  auto rec = [](auto&& self, int size, int level) -> int {
    if (size <= 1) return 0;
    if (level == 0 || size <= 4) return 2 * detail::ceil_log2(size);
    auto key = std::make_pair(size, level);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int block = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(size))));
    const int nb = 2 * ((size + block - 1) / block);
    int env_block = 0, env_boundary = 0;
    for (int s = 1; s <= block; ++s) env_block = std::max(env_block, self(self, s, level - 1));
    for (int s = 1; s <= nb; ++s) env_boundary = std::max(env_boundary, self(self, s, level - 1));
    const int r = std::max(env_block, 2 + env_boundary);
    memo[key] = r;
    return r;
  };
  int best = 0;
  for (int s = 1; s <= m; ++s) best = std::max(best, rec(rec, s, detail::kHierarchyLevels));
  return best;
}

inline SpannerGraph build_list_spanner(int m,
                                       ListSpannerKind kind = ListSpannerKind::kBalanced) {
  if (m < 1) throw invalid_argument("m must be >= 1");
  SpannerGraph g(m);
  std::vector<Vertex> order(m);
  std::iota(order.begin(), order.end(), 0);
  add_list_spanner(g, order, [](Vertex a, Vertex b) { return std::abs(double(a - b)); },
                   kind);
  return g;
}

struct LineOptions {
  ListSpannerKind list = ListSpannerKind::kBalanced;
};

namespace detail {

inline void add_path_edges(SpannerGraph& g, const LineInstance& inst) {
  for (int i = 0; i + 1 < inst.size(); ++i) g.add_edge(i, i + 1, inst.distance(i, i + 1));
}

inline void line_low_rec(SpannerGraph& g, const LineInstance& inst, int lo, int hi,
                         int k, const LineOptions& opt) {
  const int len = hi - lo + 1;
  if (len <= 1) return;
  auto w = [&](Vertex a, Vertex b) { return inst.distance(a, b); };
  std::vector<Vertex> anchors;
  if (len <= k) {
    for (int i = lo; i <= hi; ++i) anchors.push_back(i);
  } else {
    for (int c : select_cuts_1d(len, k)) anchors.push_back(lo + c);
  }
  add_list_spanner(g, anchors, w, opt.list);
  for (Vertex a : anchors) {
    if (a != lo) g.add_edge(lo, a, w(lo, a));
    if (a != hi) g.add_edge(hi, a, w(hi, a));
  }
  if (len <= k) return;
  for (std::size_t i = 0; i + 1 < anchors.size(); ++i)
    if (anchors[i + 1] - anchors[i] > 1)
      line_low_rec(g, inst, anchors[i] + 1, anchors[i + 1] - 1, k, opt);
}

inline void line_high_rec(SpannerGraph& g, const LineInstance& inst, int lo, int hi,
                          int k) {
  const int len = hi - lo + 1;
  if (len <= k) return;
  const auto cuts = select_cuts_1d(len, k);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Vertex a = lo + cuts[i], b = lo + cuts[i + 1];
    g.add_edge(a, b, inst.distance(a, b));
    if (b - a > 1) line_high_rec(g, inst, a + 1, b - 1, k);
  }
}

}  // namespace detail

// Low-diameter construction: list spanner over the cuts, both sentinels
// joined to every cut, recursion into the gaps. Max degree <= k + 2.
inline SpannerGraph build_line_low(const LineInstance& inst, int k,
                                   const LineOptions& opt = {}) {
  if (k < 2) throw invalid_argument("k must be >= 2");
  SpannerGraph g(inst.size());
  detail::add_path_edges(g, inst);
  detail::line_low_rec(g, inst, 0, inst.size() - 1, k, opt);
  return g;
}

// High-diameter construction: consecutive cuts joined by a path at every
// level. Max degree <= 4, at most 2n edges.
inline SpannerGraph build_line_high(const LineInstance& inst, int k) {
  if (k < 2) throw invalid_argument("k must be >= 2");
  SpannerGraph g(inst.size());
  detail::add_path_edges(g, inst);
  detail::line_high_rec(g, inst, 0, inst.size() - 1, k);
  return g;
}

// ---------------------------------------------------------------------------
// Hop-diameter bounds from the construction recurrences. Gaps between cuts
// hold at most ceil(n/k) - 1 points; every bound is a running maximum over
// smaller sizes so it applies to any gap.

namespace detail {

template <typename Step>
std::vector<int> envelope_table(int n, Step step) {
  std::vector<int> raw(n + 1, 0), env(n + 1, 0);
  for (int m = 1; m <= n; ++m) {
    raw[m] = step(m, env);
    env[m] = std::max(env[m - 1], raw[m]);
  }
  return env;
}

}  // namespace detail

// Sentinel radius of the low construction: R(q) = 1 for 2 <= q <= k,
// R(n) = 2 + R(ceil(n/k) - 1).
inline int line_low_radius_bound(int n, int k) {
  auto t = detail::envelope_table(n, [k](int m, const std::vector<int>& env) {
    if (m <= 1) return 0;
    if (m <= k) return 1;
    return 2 + env[(m + k - 1) / k - 1];
  });
  return t[n];
}

// Lambda(q) = D_list(q) for q <= k,
// Lambda(n) = max(Lambda(g), 2 + D_list(k+1) + 2 R(g)), g = ceil(n/k) - 1.
inline int line_low_lambda_bound(int n, int k,
                                 ListSpannerKind kind = ListSpannerKind::kBalanced) {
  const int dl = list_hop_bound(k + 1, kind);
  std::vector<int> radius(n + 1, 0);
  for (int m = 0; m <= n; ++m) radius[m] = line_low_radius_bound(m, k);
  auto t = detail::envelope_table(n, [&](int m, const std::vector<int>& env) {
    if (m <= 1) return 0;
    if (m <= k) return list_hop_bound(m, kind);
    const int g = (m + k - 1) / k - 1;
    return std::max(env[g], 2 + dl + 2 * radius[g]);
  });
  return t[n];
}

// R'(q) = q - 1 for q <= k, R'(n) = k + R'(ceil(n/k) - 1).
inline int line_high_radius_bound(int n, int k) {
  auto t = detail::envelope_table(n, [k](int m, const std::vector<int>& env) {
    if (m <= 1) return 0;
    if (m <= k) return m - 1;
    return k + env[(m + k - 1) / k - 1];
  });
  return t[n];
}

// Lambda'(q) = q - 1 for q <= k, Lambda'(n) = max(Lambda'(g), k + 2 R'(g)).
inline int line_high_lambda_bound(int n, int k) {
  std::vector<int> radius(n + 1, 0);
  for (int m = 0; m <= n; ++m) radius[m] = line_high_radius_bound(m, k);
  auto t = detail::envelope_table(n, [&](int m, const std::vector<int>& env) {
    if (m <= 1) return 0;
    if (m <= k) return m - 1;
    const int g = (m + k - 1) / k - 1;
    return std::max(env[g], k + 2 * radius[g]);
  });
  return t[n];
}

}  // namespace hopspan
