#pragma once

// Parameter sweeps and their CSV reports.
//
// Seeds: the instance for (n, trial) is generated from
// derive_seed(seed, n, trial), independent of k, so runs with different k
// are paired and any single trial can be re-run on its own.

#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "hopspan/analysis.hpp"
#include "hopspan/dumbbell.hpp"
#include "hopspan/io.hpp"
#include "hopspan/line_spanner.hpp"
#include "hopspan/random.hpp"
#include "hopspan/tree_metric.hpp"
#include "hopspan/tree_spanner.hpp"
#include "hopspan/wspd.hpp"

namespace hopspan {

inline const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names{"line-low",  "line-high",  "tree-low",
                                              "tree-high", "euclid-low", "euclid-high"};
  return names;
}

inline bool is_construction(const std::string& v) {
  for (const auto& n : construction_names())
    if (n == v) return true;
  return false;
}

struct ExperimentConfig {
  std::string variant = "tree-low";
  std::vector<int> ns;
  std::vector<int> ks;
  double eps = 0.5;
  double s = 8.0;
  std::uint64_t seed = 1;
  int trials = 1;
  std::string output;   // empty: stdout
  bool timing = false;  // wall_ms stays 0 otherwise, keeping reports byte-stable

  void validate() const {
    if (!is_construction(variant)) throw invalid_argument("unknown variant '" + variant + "'");
    for (int n : ns)
      if (n < 1) throw invalid_argument("n values must be positive");
    for (int k : ks)
      if (k < 2) throw invalid_argument("k values must be >= 2");
    if (!(eps > 0)) throw invalid_argument("eps must be > 0");
    if (!(s > 0)) throw invalid_argument("s must be > 0");
    if (trials < 1) throw invalid_argument("trials must be >= 1");
  }
};

struct SweepRow {
  std::string variant;
  int n = 0, k = 0, trial = 0;
  double eps = 0.0;
  std::size_t edges = 0;
  int max_degree = 0;
  int lambda = 0;
  double lightness = 0.0;
  double wall_ms = 0.0;
  std::string error;  // empty on success
};

inline std::uint64_t instance_seed(std::uint64_t seed, int n, int trial) {
  return derive_seed(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial));
}

// Builds one construction and measures it. Λ is taken at stretch 1 for the
// exact constructions and at 1 + eps for the Euclidean ones.
inline SweepRow run_one(const std::string& variant, int n, int k, double eps, int trial,
                        std::uint64_t seed, bool timing) {
  SweepRow row;
  row.variant = variant;
  row.n = n;
  row.k = k;
  row.eps = eps;
  row.trial = trial;
  const std::uint64_t is = instance_seed(seed, n, trial);
  try {
    SpannerGraph g;
    MetricOracle metric;
    double t = 1.0;
    const auto t0 = std::chrono::steady_clock::now();
    if (variant == "line-low" || variant == "line-high") {
      const LineInstance inst =
          LineInstance::from_points(generate_points(PointKind::kUniform, n, 1, is));
      g = variant == "line-low" ? build_line_low(inst, k) : build_line_high(inst, k);
      metric = inst.metric();
    } else if (variant == "tree-low" || variant == "tree-high") {
      const RootedWeightedTree tree = generate_tree(TreeKind::kRandom, n, is);
      g = variant == "tree-low" ? build_tree_low(tree, k) : build_tree_high(tree, k);
      metric = tree_metric(tree);
    } else {
      const PointSet pts = generate_points(PointKind::kUniform, n, 2, is);
      g = build_euclid_spanner(pts, eps, k,
                               variant == "euclid-low" ? TreeSpannerVariant::kLow
                                                       : TreeSpannerVariant::kHigh);
      metric = euclidean_metric(pts);
      t = 1 + eps;
    }
    const auto t1 = std::chrono::steady_clock::now();
    if (timing) row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    row.edges = g.edge_count();
    row.max_degree = max_degree(g);
    row.lambda = n > 1 ? hop_diameter(g, metric, t) : 0;
    row.lightness = n > 1 ? lightness(g, metric) : 0.0;
  } catch (const Error& e) {
    row.error = e.code();
  }
  return row;
}

inline const char* kSweepSchema = "# schema: sweep-v1";
inline const char* kSweepHeader =
    "variant,n,k,eps,trial,edges,max_degree,lambda,lightness,wall_ms,error";

inline void write_sweep_row(std::ostream& out, const SweepRow& r) {
  out << r.variant << ',' << r.n << ',' << r.k << ',' << fmt_double(r.eps) << ',' << r.trial
      << ',';
  if (r.error.empty())
    out << r.edges << ',' << r.max_degree << ',' << r.lambda << ',' << fmt_double(r.lightness)
        << ',' << fmt_double(r.wall_ms) << ",\n";
  else
    out << ",,,," << fmt_double(r.wall_ms) << ',' << r.error << '\n';
}

// Rows in (n, k, trial) order; a failing row records its error code and the
// sweep continues.
inline std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg, std::ostream& out) {
  cfg.validate();
  out << kSweepSchema << '\n' << kSweepHeader << '\n';
  std::vector<SweepRow> rows;
  for (int n : cfg.ns)
    for (int k : cfg.ks)
      for (int trial = 0; trial < cfg.trials; ++trial) {
        rows.push_back(run_one(cfg.variant, n, k, cfg.eps, trial, cfg.seed, cfg.timing));
        write_sweep_row(out, rows.back());
      }
  return rows;
}

inline void write_profile_csv(std::ostream& out, const std::vector<ProfileRow>& rows) {
  out << "# schema: wspd-profile-v1\n"
      << "n,trial,w_estar,w_mst,ratio_estar,ratio_mst\n";
  for (const auto& r : rows)
    out << r.n << ',' << r.trial << ',' << fmt_double(r.w_estar) << ',' << fmt_double(r.w_mst)
        << ',' << fmt_double(r.ratio_estar) << ',' << fmt_double(r.ratio_mst) << '\n';
}

}  // namespace hopspan
