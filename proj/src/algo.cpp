#include "wk/algo.hpp"

#include <cmath>
#include <stdexcept>

#include "wk/calibration.hpp"
#include "wk/colorcode.hpp"
#include "wk/conv.hpp"
#include "wk/partition.hpp"
#include "wk/rng.hpp"
#include "wk/simeff.hpp"

namespace wk {
namespace {

i64 ceil_pos(long double v) { return std::max<i64>(1, (i64)std::ceil(v - 1e-12L)); }

// approx_add only needs to reach weight f * window, f its proven factor.
i64 add_cap(PointSpan items, const EffBand& band, double acc, i64 window) {
  if (window == kNoCap) return kNoCap;
  const long double f = similar_eff_factor(acc, efficiency_classes(items, band, acc));
  return (i64)std::ceil(f * (long double)window);
}

PointSet add_only(PointSpan items, double acc, i64 window) {
  const auto band = band_of(items);
  return approx_add(items, band, acc, add_cap(items, band, acc, window));
}

// approx_del has no cap: its error is relative to the group total.
PointSet add_and_del(PointSpan items, double acc, i64 window) {
  const auto band = band_of(items);
  auto s = approx_add(items, band, acc, add_cap(items, band, acc, window));
  auto d = approx_del(items, band, acc);
  return pareto_union(s, d).release();
}

PointSpan slice(const PointSet& s, const Group& g) { return PointSpan(s).subspan(g.begin, g.size()); }

}  // namespace

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Exp116: return "exp116";
    case Strategy::Exp74: return "exp74";
    case Strategy::ColorCodingOnly: return "colorcode";
  }
  return "?";
}

Strategy parse_strategy(const std::string& s) {
  if (s == "auto") return Strategy::Auto;
  if (s == "exp116") return Strategy::Exp116;
  if (s == "exp74") return Strategy::Exp74;
  if (s == "colorcode") return Strategy::ColorCodingOnly;
  throw std::invalid_argument("unknown strategy: " + s);
}

i64 tau_116(double alpha, double eps) { return ceil_pos(std::pow(1.0L / eps, 11.0L / 12) / alpha); }
i64 tau_74(double alpha, double eps) { return ceil_pos(std::pow(1.0L / eps, 5.0L / 6) / alpha); }
std::size_t head_size(double alpha, double eps) { return (std::size_t)ceil_pos(1.0L / ((long double)alpha * eps)) + 1; }

PointSet solve_rp_116(const RpInstance& rp, const SolverConfig& cfg) {
  validate_rp(rp, cfg.eps);
  if (rp.items.empty()) return {{0, 0}};
  const auto sorted = sort_by_efficiency(rp.items).items;
  const i64 tau = tau_116(rp.alpha, cfg.eps);
  const auto plan = partition_116(sorted, rp.alpha, cfg.eps, tau);
  const double bad_acc = std::min(1.0, 1.0 / (rp.alpha * (double)tau));
  const i64 win = rp_window(rp, cfg.eps);
  std::vector<PointSet> sets;
  for (const auto& g : plan.groups) {
    if (g.empty()) continue;
    auto items = slice(sorted, g);
    // the trailing remainder can be a bad group far larger than tau, where
    // complement error 1/(alpha tau) per item is no help; approx_add at eps
    // keeps the window error at 1/alpha
    if (g.kind == GroupKind::Bad && (i64)g.size() <= tau)
      sets.push_back(add_and_del(items, bad_acc, win));
    else
      sets.push_back(add_only(items, cfg.eps, win));
  }
  return merge_many(sets, ConvConfig{cfg.eps});
}

PointSet solve_rp_74_head(PointSpan head, double alpha, const SolverConfig& cfg, i64 window) {
  if (head.empty()) return {{0, 0}};
  const auto plan = partition_head(head, tau_74(alpha, cfg.eps));
  std::vector<PointSet> sets;
  for (const auto& g : plan.groups) {
    if (g.empty()) continue;
    const double acc = std::min(1.0, 1.0 / (alpha * (double)g.size()));
    sets.push_back(add_and_del(head.subspan(g.begin, g.size()), acc, window));
  }
  return merge_many(sets, ConvConfig{cfg.eps});
}

PointSet solve_rp_74(const RpInstance& rp, const SolverConfig& cfg) {
  validate_rp(rp, cfg.eps);
  if (rp.items.empty()) return {{0, 0}};
  const auto sorted = sort_by_efficiency(rp.items).items;
  const std::size_t h = std::min(sorted.size(), head_size(rp.alpha, cfg.eps));
  std::vector<PointSet> sets;
  const i64 win = rp_window(rp, cfg.eps);
  sets.push_back(solve_rp_74_head(PointSpan(sorted).first(h), rp.alpha, cfg, win));
  const PointSet tail(sorted.begin() + (std::ptrdiff_t)h, sorted.end());
  const auto plan = partition_tail(tail, rp.alpha, cfg.eps);
  for (std::size_t j = 0; j < plan.groups.size(); ++j) {
    const auto& g = plan.groups[j];
    if (g.empty()) continue;
    auto items = slice(tail, g);
    const double acc = std::min(1.0, std::ldexp(cfg.eps, (int)std::min<std::size_t>(j, 60)));
    sets.push_back(add_only(items, acc, win));
  }
  return merge_many(sets, ConvConfig{cfg.eps});
}

double color_coding_threshold(Strategy s, double eps) {
  switch (s) {
    case Strategy::Exp116: return std::pow(1.0 / eps, 2.0 / 3);
    case Strategy::ColorCodingOnly: return 0.0;
    default: return std::pow(1.0 / eps, 3.0 / 4);
  }
}

Strategy resolve_strategy(Strategy s, double alpha, double eps) {
  if (s == Strategy::ColorCodingOnly || alpha >= color_coding_threshold(s, eps)) return Strategy::ColorCodingOnly;
  return s == Strategy::Exp116 ? Strategy::Exp116 : Strategy::Exp74;
}

PointSet solve_rp(const RpInstance& rp, const SolverConfig& cfg) {
  switch (resolve_strategy(cfg.strategy, rp.alpha, cfg.eps)) {
    case Strategy::Exp116: return solve_rp_116(rp, cfg);
    case Strategy::Exp74: return solve_rp_74(rp, cfg);
    default: {
      Rng rng(cfg.seed);
      return solve_rp_large_alpha(rp, cfg.eps, rng);
    }
  }
}

RpSolver make_rp_solver(Strategy s) {
  return [s](const RpInstance& rp, double eps, std::uint64_t seed) {
    return solve_rp(rp, SolverConfig{eps, seed, s});
  };
}

double rp_error_bound(double alpha, double eps) { return kRpC * std::log2(2.0 / eps) / alpha; }

}  // namespace wk
