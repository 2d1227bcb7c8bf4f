#include "wk/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "wk/calibration.hpp"
#include "wk/conv.hpp"
#include "wk/oracle.hpp"
#include "wk/rng.hpp"

namespace wk {
namespace {

std::vector<std::size_t> efficiency_order(const PointSet& items, const std::vector<std::size_t>& idx) {
  auto out = idx;
  std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    return (i128)items[a].profit * items[b].weight > (i128)items[b].profit * items[a].weight;
  });
  return out;
}

// Scans idx in efficiency order and closes a group once key(sum) > unit.
// Returns the closed groups and leaves the partial last group in `rest`.
template <class Key>
std::vector<MetaGroup> group_scan(const PointSet& items, const std::vector<std::size_t>& idx, i64 unit,
                                  Key key, MetaGroup& rest) {
  std::vector<MetaGroup> groups;
  MetaGroup cur;
  for (auto i : efficiency_order(items, idx)) {
    cur.members.push_back(i);
    cur.sum += items[i];
    if (key(cur.sum) > unit) {
      groups.push_back(std::move(cur));
      cur = {};
    }
  }
  rest = std::move(cur);
  return groups;
}

i64 pow2_at_least(i64 num, i64 unit) {
  // smallest power of two a with 2*a*unit >= num
  i64 a = 1;
  while ((i128)2 * a * unit < num) a <<= 1;
  return a;
}

i64 relaxed(i64 t, double c, double eps) {
  return (i64)std::floor((long double)t * (1.0L + (long double)c * eps));
}

}  // namespace

PreprocessOutcome preprocess_profits(const Instance& inst, const EpsBudget& budget) {
  PreprocessOutcome out;
  out.capacity = inst.capacity;
  out.eps = budget.total;
  auto& au = out.audit;

  PointSet kept;
  for (const auto& it : inst.items) {
    if (it.weight > inst.capacity)
      ++au.removed_heavy;
    else
      kept.push_back(it);
  }
  au.y = greedy_half_opt(Instance{kept, inst.capacity, inst.eps});
  out.opt_lower = au.y;
  out.opt_upper = 2 * au.y;
  au.profit_unit = std::max<i64>(1, (i64)std::floor(2.0L * budget.profit() * (long double)au.y));

  std::vector<std::size_t> cheap;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i].profit <= au.profit_unit)
      cheap.push_back(i);
    else
      out.items.push_back(kept[i]);
  }
  au.cheap_groups = group_scan(kept, cheap, au.profit_unit, [](const Point& s) { return s.profit; },
                               au.discarded_cheap);
  // a meta-item heavier than t never enters the efficiency prefix that the
  // exchange argument swaps in
  for (const auto& g : au.cheap_groups) {
    if (g.sum.weight > inst.capacity)
      ++au.removed_heavy_meta;
    else
      out.items.push_back(g.sum);
  }
  return out;
}

PreprocessOutcome preprocess_weights(PreprocessOutcome out, const EpsBudget& budget) {
  auto& au = out.audit;
  au.weight_unit = std::max<i64>(1, (i64)std::floor(budget.weight() * (long double)out.capacity));
  PointSet items = std::move(out.items);
  out.items.clear();
  std::vector<std::size_t> small;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].weight <= au.weight_unit)
      small.push_back(i);
    else
      out.items.push_back(items[i]);
  }
  au.small_groups = group_scan(items, small, au.weight_unit, [](const Point& s) { return s.weight; },
                               au.forced_small);
  for (const auto& g : au.small_groups) out.items.push_back(g.sum);
  out.forced = au.forced_small.sum;
  return out;
}

std::vector<LogGroup> split_log_groups(const PreprocessOutcome& out, double eps) {
  const i64 uw = out.audit.weight_unit, up = out.audit.profit_unit;
  std::map<std::pair<i64, i64>, LogGroup> by_key;
  for (std::size_t i = 0; i < out.items.size(); ++i) {
    const auto& it = out.items[i];
    if (it.weight <= uw || it.profit <= up)
      throw std::logic_error("split_log_groups: item below the preprocessing units");
    const i64 a = pow2_at_least(it.weight, uw), b = pow2_at_least(it.profit, up);
    auto& g = by_key[{a, b}];
    g.a = a;
    g.b = b;
    g.members.push_back(i);
  }
  std::vector<LogGroup> groups;
  for (auto& [key, g] : by_key) {
    auto& rp = g.rp;
    rp.unit = kRpUnit;
    rp.weight_scale = uw * g.a;
    rp.profit_scale = up * g.b;
    rp.alpha = std::clamp(0.5 * (double)std::max(g.a, g.b), 0.5, rp_alpha_max(eps));
    for (auto i : g.members) {
      const auto& it = out.items[i];
      const i128 w = ((i128)it.weight * rp.unit + rp.weight_scale - 1) / rp.weight_scale;
      const i128 p = (i128)it.profit * rp.unit / rp.profit_scale;
      rp.items.push_back({(i64)w, (i64)p});
    }
    groups.push_back(std::move(g));
  }
  return groups;
}

Point map_back(const Point& p, const RpInstance& rp) {
  const i128 w = ((i128)p.weight * rp.weight_scale + rp.unit - 1) / rp.unit;
  const i128 q = (i128)p.profit * rp.profit_scale / rp.unit;
  return {(i64)w, (i64)q};
}

WeakResult solve_weak(Instance inst, const RpSolver& solver, std::uint64_t seed, const WeakConfig& cfg) {
  WeakResult res;
  auto& au = res.audit;
  au.eps_clamped = normalize_instance(inst);
  au.budget = cfg.shares;
  au.budget.total = inst.eps;
  const double c = cfg.c > 0 ? cfg.c : kWeakSelectC;
  au.capacity = inst.capacity;
  au.relaxed_capacity = relaxed(inst.capacity, c, inst.eps);

  auto pre = preprocess_weights(preprocess_profits(inst, au.budget), au.budget);
  au.preprocess = pre.audit;
  au.discarded_profit = pre.audit.discarded_cheap.sum.profit;
  au.forced_weight = pre.forced.weight;

  const i64 cap = au.relaxed_capacity - pre.forced.weight;
  const Rng root(seed);
  std::vector<PointSet> sets;
  std::size_t gi = 0;
  for (const auto& g : split_log_groups(pre, au.budget.rp())) {
    GroupAudit ga{g.a, g.b, g.rp.alpha, g.rp.items.size(), 0, 0};
    auto pts = solver(g.rp, au.budget.rp(), root.split(gi++).seed());
    ga.rp_points = pts.size();
    PointSet mapped;
    for (const auto& p : pts) {
      auto q = map_back(p, g.rp);
      if (q.weight <= cap) mapped.push_back(q);
    }
    mapped.push_back({0, 0});
    auto front = pareto_filter(mapped).release();
    ga.kept_points = front.size();
    sets.push_back(std::move(front));
    au.groups.push_back(ga);
  }

  PointSet merged = sets.empty() ? PointSet{{0, 0}} : merge_many(sets, ConvConfig{au.budget.merge()});
  au.merged_points = merged.size();
  PointSet shifted;
  for (const auto& p : merged)
    if (p.weight <= cap) shifted.push_back(p + pre.forced);
  if (shifted.empty()) shifted.push_back(pre.forced);
  res.set = pareto_filter(shifted);
  auto best = res.set.best_within(au.relaxed_capacity);
  res.answer = best ? *best : Point{};
  au.weight_ratio = inst.capacity > 0 ? (double)res.answer.weight / (double)inst.capacity : 0.0;
  return res;
}

}  // namespace wk
