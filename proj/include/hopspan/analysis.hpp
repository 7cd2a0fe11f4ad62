#pragma once

// Ground-truth checks that share no code with the constructions: MST weight,
// lightness, exact stretch, hop diameter at stretch t, and maximum degree.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "hopspan/core.hpp"
#include "hopspan/random.hpp"

namespace hopspan {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Dense Prim, O(n^2).
inline double mst_weight(const MetricOracle& metric) {
  const int n = metric.n;
  if (n < 1) throw invalid_argument("mst needs n >= 1");
  std::vector<double> best(n, kInf);
  std::vector<char> done(n, 0);
  best[0] = 0.0;
  double total = 0.0;
  for (int it = 0; it < n; ++it) {
    int u = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && (u < 0 || best[v] < best[u])) u = v;
    done[u] = 1;
    total += best[u];
    for (int v = 0; v < n; ++v)
      if (!done[v]) best[v] = std::min(best[v], metric(u, v));
  }
  return total;
}

inline double lightness(const SpannerGraph& g, const MetricOracle& metric) {
  if (metric.n < 2) throw invalid_argument("lightness needs n >= 2");
  return g.total_weight() / mst_weight(metric);
}

inline int max_degree(const SpannerGraph& g) {
  int d = 0;
  for (Vertex v = 0; v < g.size(); ++v) d = std::max(d, g.degree(v));
  return d;
}

namespace detail {

struct Adjacency {
  std::vector<std::vector<std::pair<int, double>>> out;
  explicit Adjacency(const SpannerGraph& g) : out(g.size()) {
    for (const Edge& e : g.edges()) {
      out[e.u].push_back({e.v, e.w});
      out[e.v].push_back({e.u, e.w});
    }
  }
};

inline std::vector<double> dijkstra(const Adjacency& adj, int src) {
  std::vector<double> dist(adj.out.size(), kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[src] = 0.0;
  pq.push({0.0, src});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    for (auto [v, w] : adj.out[u])
      if (d + w < dist[v]) {
        dist[v] = d + w;
        pq.push({dist[v], v});
      }
  }
  return dist;
}

}  // namespace detail

struct StretchReport {
  double stretch = 1.0;
  int worst_u = kNone;
  int worst_v = kNone;
  long long pairs = 0;
  bool sampled = false;
};

inline StretchReport stretch_from_sources(const SpannerGraph& g, const MetricOracle& metric,
                                          const std::vector<int>& sources) {
  if (g.size() != metric.n) throw invalid_argument("graph and metric differ in size");
  const detail::Adjacency adj(g);
  StretchReport r;
  for (int s : sources) {
    const auto dist = detail::dijkstra(adj, s);
    for (int v = 0; v < metric.n; ++v) {
      if (v == s) continue;
      ++r.pairs;
      if (dist[v] == kInf)
        throw Error("disconnected", "no path between " + std::to_string(s) + " and " +
                                        std::to_string(v));
      const double ratio = dist[v] / metric(s, v);
      if (ratio > r.stretch) {
        r.stretch = ratio;
        r.worst_u = s;
        r.worst_v = v;
      }
    }
  }
  return r;
}

// Exact all-pairs stretch. Throws "disconnected" for a disconnected graph.
inline double stretch(const SpannerGraph& g, const MetricOracle& metric) {
  std::vector<int> all(metric.n);
  std::iota(all.begin(), all.end(), 0);
  return stretch_from_sources(g, metric, all).stretch;
}

// All pairs up to n = 1024; beyond that, Dijkstra from 10 seeded sources
// (10 (n-1) pairs), flagged as sampled.
inline constexpr int kExactPairsLimit = 1024;
inline constexpr int kSampledSources = 10;

inline StretchReport stretch_report(const SpannerGraph& g, const MetricOracle& metric,
                                    std::uint64_t seed = 1) {
  std::vector<int> sources;
  const bool sample = metric.n > kExactPairsLimit;
  if (!sample) {
    sources.resize(metric.n);
    std::iota(sources.begin(), sources.end(), 0);
  } else {
    Rng rng(seed);
    while (static_cast<int>(sources.size()) < kSampledSources) {
      const int s = static_cast<int>(rng.below(metric.n));
      if (std::find(sources.begin(), sources.end(), s) == sources.end()) sources.push_back(s);
    }
  }
  auto r = stretch_from_sources(g, metric, sources);
  r.sampled = sample;
  return r;
}

// Minimum h such that every pair has a path of at most h edges and weight at
// most t times its distance. Layered relaxation per source:
// d_h(v) = min(d_{h-1}(v), min over edges (u,v) of d_{h-1}(u) + w), with h
// increased until every target is satisfied. Throws "stretch_precondition"
// when some pair has no such path at all.
inline int hop_diameter(const SpannerGraph& g, const MetricOracle& metric, double t = 1.0) {
  if (t < 1.0) throw invalid_argument("t must be >= 1");
  const int n = metric.n;
  if (g.size() != n) throw invalid_argument("graph and metric differ in size");
  int worst = 0;
  std::vector<double> cur(n), next(n);
  for (int s = 0; s < n; ++s) {
    std::fill(cur.begin(), cur.end(), kInf);
    cur[s] = 0.0;
    int pending = n - 1;
    std::vector<char> ok(n, 0);
    ok[s] = 1;
    for (int h = 1; pending > 0; ++h) {
      if (h >= n)
        throw Error("stretch_precondition",
                    "some pair from vertex " + std::to_string(s) + " exceeds stretch t");
      next = cur;
      for (const Edge& e : g.edges()) {
        next[e.v] = std::min(next[e.v], cur[e.u] + e.w);
        next[e.u] = std::min(next[e.u], cur[e.v] + e.w);
      }
      cur.swap(next);
      for (int v = 0; v < n; ++v) {
        if (ok[v]) continue;
        const double bound = t * metric(s, v);
        if (cur[v] <= bound + tolerance(bound)) {
          ok[v] = 1;
          --pending;
          worst = std::max(worst, h);
        }
      }
    }
  }
  return worst;
}

}  // namespace hopspan
