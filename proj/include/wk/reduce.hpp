#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wk/core.hpp"
#include "wk/rp.hpp"

namespace wk {

// Named shares of the accuracy parameter. Each stage runs at total * share.
// The cheap-item step loses up to 8 * eps_profit * y, so its share is what
// keeps the answer nonzero at eps near 1. The RP window only covers a group's
// part of the optimum while eps_rp <= 2 * min(eps_profit, eps_weight).
struct EpsBudget {
  double total = 0.1;
  double profit_share = 1.0 / 16;
  double weight_share = 1.0 / 8;
  double rp_share = 1.0 / 8;
  double merge_share = 1.0 / 8;

  double profit() const { return total * profit_share; }
  double weight() const { return total * weight_share; }
  double rp() const { return total * rp_share; }
  double merge() const { return total * merge_share; }
};

// A block of items grouped into one meta-item; members index the input of
// the step that formed it.
struct MetaGroup {
  std::vector<std::size_t> members;
  Point sum;
};

struct PreprocessAudit {
  i64 y = 0;            // greedy value, OPT in [y, 2y]
  i64 profit_unit = 1;  // cheap means profit <= profit_unit
  i64 weight_unit = 1;  // small means weight <= weight_unit
  std::size_t removed_heavy = 0;
  std::size_t removed_heavy_meta = 0;
  std::vector<MetaGroup> cheap_groups;
  MetaGroup discarded_cheap;  // last partial group, profit <= profit_unit
  std::vector<MetaGroup> small_groups;
  MetaGroup forced_small;  // last partial group, weight <= weight_unit
};

// Items stay in the original units; the per group rescaling to the unit box
// happens in split_log_groups.
struct PreprocessOutcome {
  PointSet items;
  i64 capacity = 0;
  double eps = 1.0;
  i64 opt_lower = 0;
  i64 opt_upper = 0;
  Point forced;  // always taken, costs weight <= weight_unit
  PreprocessAudit audit;
};

PreprocessOutcome preprocess_profits(const Instance& inst, const EpsBudget& budget);
PreprocessOutcome preprocess_weights(PreprocessOutcome out, const EpsBudget& budget);

struct LogGroup {
  i64 a = 1;  // weights in (a*u_w, 2a*u_w]
  i64 b = 1;  // profits in (b*u_p, 2b*u_p]
  std::vector<std::size_t> members;
  RpInstance rp;
};

std::vector<LogGroup> split_log_groups(const PreprocessOutcome& out, double eps);

// RP point to original units: weight rounds up, profit down.
Point map_back(const Point& p, const RpInstance& rp);

struct GroupAudit {
  i64 a = 1, b = 1;
  double alpha = 0.5;
  std::size_t items = 0;
  std::size_t rp_points = 0;
  std::size_t kept_points = 0;
};

struct WeakAudit {
  EpsBudget budget;
  bool eps_clamped = false;
  PreprocessAudit preprocess;
  std::vector<GroupAudit> groups;
  std::size_t merged_points = 0;
  i64 capacity = 0;
  i64 relaxed_capacity = 0;
  // Profit given up by discarding the partial cheap group, weight spent on
  // the forced small group.
  i64 discarded_profit = 0;
  i64 forced_weight = 0;
  double weight_ratio = 0.0;  // answer weight / capacity, 0 when capacity = 0
};

struct WeakResult {
  ParetoSet set;  // every point is dominated by some subset sum of the input
  Point answer;
  WeakAudit audit;
};

struct WeakConfig {
  double c = 0.0;  // relaxed capacity floor((1 + c eps) t); 0 picks kWeakSelectC
  EpsBudget shares;  // total is overwritten by the instance eps
};

WeakResult solve_weak(Instance inst, const RpSolver& solver, std::uint64_t seed,
                      const WeakConfig& cfg = {});

}  // namespace wk
