#pragma once

#include <cstdint>
#include <string>

#include "wk/core.hpp"
#include "wk/rp.hpp"
#include "wk/simeff.hpp"

namespace wk {

enum class Strategy { Auto, Exp116, Exp74, ColorCodingOnly };

const char* to_string(Strategy s);
// Accepts auto, exp116, exp74, colorcode.
Strategy parse_strategy(const std::string& s);

struct SolverConfig {
  double eps = 0.1;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::Auto;
};

// tau of the two partitions: ceil((1/eps)^(11/12) / alpha), ceil((1/eps)^(5/6) / alpha).
i64 tau_116(double alpha, double eps);
i64 tau_74(double alpha, double eps);
// Head size ceil(1/(alpha eps)) + 1.
std::size_t head_size(double alpha, double eps);

PointSet solve_rp_116(const RpInstance& rp, const SolverConfig& cfg);
// `head` sorted by descending efficiency; window in grid units.
PointSet solve_rp_74_head(PointSpan head, double alpha, const SolverConfig& cfg, i64 window = kNoCap);
PointSet solve_rp_74(const RpInstance& rp, const SolverConfig& cfg);

// Above this alpha the strategy hands over to color coding.
double color_coding_threshold(Strategy s, double eps);
// The path solve_rp takes: Exp116, Exp74 or ColorCodingOnly.
Strategy resolve_strategy(Strategy s, double alpha, double eps);
PointSet solve_rp(const RpInstance& rp, const SolverConfig& cfg);

RpSolver make_rp_solver(Strategy s);

// Allowed additive error of an RP solver, in box units (multiply by unit).
double rp_error_bound(double alpha, double eps);

}  // namespace wk
