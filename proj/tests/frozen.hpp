#pragma once

// Constants calibrated once on the seeds below and then frozen. Each comment
// gives the worst value measured at calibration time.

namespace frozen {

// |E(build_line_low)| <= c * n over n <= 512, k in {2,3,4,8,16}, both list
// spanners (worst 3.32 at n=272, k=16).
inline constexpr double kLineLowEdges = 4.0;

// w(build_line_high) <= c * log_k n * w(MST) on uniform lines with n >= k^2
// (worst 1.38).
inline constexpr double kLineHighLightness = 1.5;

// |E(build_tree_low)| <= c * n and |E(build_tree_high)| <= c * n over
// random/path/star/binary/caterpillar trees, n <= 512, k in {2,3,4,8,16}
// (worst 3.18 and 1.35).
inline constexpr double kTreeLowEdges = 3.5;
inline constexpr double kTreeHighEdges = 1.5;

// |pairs| <= c_s * n for the WSPD on uniform and clustered points, n <= 256
// (worst 21.6, 57.6, 71.9, 89.8 for s = 2, 6, 8, 12).
inline constexpr double kPairsPerPoint(double s) {
  return s <= 2 ? 25.0 : s <= 6 ? 65.0 : s <= 8 ? 80.0 : 100.0;
}

// w(E*)/sqrt(n) and w(MST)/sqrt(n) at s = 8 on uniform unit-square points,
// n in {256, 1024, 4096}, 20 trials, master seed 1 (E* ratio spans 413.6 to
// 1966.2; smallest MST ratio 0.642).
inline constexpr double kEstarRatioCeiling = 2500.0;
inline constexpr double kMstRatioFloor = 0.5;

// max over trees of w(tree)/w(MST) <= c * log2 n for the greedy dumbbell
// forest at eps = 0.5, uniform points, n in {32, 64, 128}, seeds 1..5
// (worst 1.50 at n = 128).
inline constexpr double kForestTreeLightnessPerLog = 2.0;

// Uniform-random dumbbell forests: acceptance cap on the number of trees.
inline constexpr int kForestCap = 12;

}  // namespace frozen
