#pragma once

// Frozen from tools/calibrate: twice the largest normalized error over
// oracle instances with n <= 24, eps in {0.5, 0.25, 0.1}, 200 seeds per cell.
namespace wk {

// solve_weak picks its answer among points of weight <= (1 + kWeakSelectC eps) t.
// Chosen, not measured.
inline constexpr double kWeakSelectC = 1.0;

// solve_weak: weight <= (1 + c eps) t and profit >= OPT / (1 + c eps); also the
// additive error of the returned set in units of (eps t, eps OPT). Observed
// max 1.0 (the weight side, pinned by kWeakSelectC); profit side 0.14,
// additive 0.26.
inline constexpr double kWeakC = 2.0;

// RP(alpha): additive error <= kRpC / alpha box units, observed max 1.0822
// (color coding at eps = 0.5). rp_error_bound adds a log2(2/eps) factor.
inline constexpr double kRpC = 2.17;

}  // namespace wk
