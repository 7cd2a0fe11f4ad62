#pragma once

// Deterministic generators for point sets and trees.
//
// Random streams come from std::mt19937_64, whose output sequence is fixed by
// the C++ standard. Reals are produced as (next() >> 11) * 2^-53, so datasets
// are bit-identical on every conforming platform; the standard <random>
// distributions are avoided because their algorithms are unspecified.
// Per-trial seeds are derived with the SplitMix64 finalizer (derive_seed).

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hopspan/core.hpp"

namespace hopspan {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Seed of trial `trial` of a sweep cell keyed by `salt` (e.g. n), so any
// single trial can be regenerated without replaying the others.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t salt,
                                 std::uint64_t trial) {
  return splitmix64(splitmix64(master ^ splitmix64(salt)) + trial);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0,1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform in [0, bound), bound > 0 (rejection sampling, no modulo bias).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

enum class PointKind { kUniform, kGrid, kCollinear, kClustered };

inline PointKind parse_point_kind(const std::string& s) {
  if (s == "uniform" || s == "uniform-unit-cube") return PointKind::kUniform;
  if (s == "grid") return PointKind::kGrid;
  if (s == "collinear") return PointKind::kCollinear;
  if (s == "clustered") return PointKind::kClustered;
  throw invalid_argument("unknown point kind '" + s + "'");
}

inline PointSet generate_points(PointKind kind, int n, int dim, std::uint64_t seed) {
  if (n < 1) throw invalid_argument("n must be >= 1");
  if (dim < 1) throw invalid_argument("dim must be >= 1");
  Rng rng(seed);
  std::vector<std::vector<double>> rows(n, std::vector<double>(dim, 0.0));
  switch (kind) {
    case PointKind::kUniform:
      for (auto& r : rows)
        for (double& x : r) x = rng.uniform();
      break;
    case PointKind::kGrid: {
      // Smallest side s with s^dim >= n, filled in lexicographic order.
      int side = 1;
      while (std::pow(side, dim) < n) ++side;
      for (int i = 0; i < n; ++i) {
        int rest = i;
        for (int a = dim - 1; a >= 0; --a) {
          rows[i][a] = rest % side;
          rest /= side;
        }
      }
      break;
    }
    case PointKind::kCollinear:
      for (int i = 0; i < n; ++i) rows[i][0] = i + 1;
      break;
    case PointKind::kClustered: {
      const int clusters = std::max(1, static_cast<int>(std::sqrt(n) / 2));
      std::vector<std::vector<double>> centers(clusters, std::vector<double>(dim));
      for (auto& c : centers)
        for (double& x : c) x = rng.uniform(0.1, 0.9);
      for (auto& r : rows) {
        const auto& c = centers[rng.below(clusters)];
        for (int a = 0; a < dim; ++a) r[a] = c[a] + rng.uniform(-0.05, 0.05);
      }
      break;
    }
  }
  return PointSet(dim, std::move(rows));
}

enum class TreeKind { kRandom, kPath, kStar, kBinary, kCaterpillar };
enum class WeightKind { kUnit, kUniform };

inline TreeKind parse_tree_kind(const std::string& s) {
  if (s == "random") return TreeKind::kRandom;
  if (s == "path") return TreeKind::kPath;
  if (s == "star") return TreeKind::kStar;
  if (s == "binary") return TreeKind::kBinary;
  if (s == "caterpillar") return TreeKind::kCaterpillar;
  throw invalid_argument("unknown tree kind '" + s + "'");
}

// Vertex 0 is the root. Random trees attach vertex v to a uniform earlier
// vertex; uniform weights are drawn from [0.5, 2).
inline RootedWeightedTree generate_tree(TreeKind kind, int n, std::uint64_t seed,
                                        WeightKind weights = WeightKind::kUniform) {
  if (n < 1) throw invalid_argument("n must be >= 1");
  Rng rng(seed);
  std::vector<Vertex> parent(n, 0);
  for (int v = 1; v < n; ++v) {
    switch (kind) {
      case TreeKind::kRandom: parent[v] = static_cast<Vertex>(rng.below(v)); break;
      case TreeKind::kPath: parent[v] = v - 1; break;
      case TreeKind::kStar: parent[v] = 0; break;
      case TreeKind::kBinary: parent[v] = (v - 1) / 2; break;
      case TreeKind::kCaterpillar: parent[v] = (v % 2 == 1) ? std::max(0, v - 2) : v - 1; break;
    }
  }
  std::vector<double> w(n, 0.0);
  for (int v = 1; v < n; ++v)
    w[v] = weights == WeightKind::kUnit ? 1.0 : rng.uniform(0.5, 2.0);
  return RootedWeightedTree(std::move(parent), std::move(w));
}

}  // namespace hopspan
