#include "wk/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace wk {

namespace {

void require_small(PointSpan items, const OracleLimits& lim) {
  if (items.size() > lim.max_items_bruteforce)
    throw OracleLimitError("bruteforce oracle: " + std::to_string(items.size()) +
                           " items exceeds limit " +
                           std::to_string(lim.max_items_bruteforce));
}

// Merge of two weight-sorted fronts, kept independent of core's filter so the
// oracle does not share code with what it checks.
PointSet merge_fronts(const PointSet& a, const PointSet& b) {
  PointSet all;
  all.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(all),
             [](const Point& x, const Point& y) {
               return x.weight != y.weight ? x.weight < y.weight : x.profit > y.profit;
             });
  PointSet out;
  out.reserve(all.size());
  i64 best = -1;
  for (const auto& p : all) {
    if (p.profit <= best) continue;
    best = p.profit;
    out.push_back(p);
  }
  return out;
}

PointSet extend(const PointSet& front, const Point& item, i64 cap) {
  PointSet shifted;
  shifted.reserve(front.size());
  for (const auto& p : front)
    if (p.weight + item.weight <= cap) shifted.push_back(p + item);
  return merge_fronts(front, shifted);
}

constexpr std::size_t kLiteralLimit = 16;
constexpr i64 kNoCap = std::numeric_limits<i64>::max();

}  // namespace

std::vector<SubsetSum> enumerate_subsets(PointSpan items) {
  if (items.size() > 24) throw OracleLimitError("enumerate_subsets: more than 24 items");
  const std::size_t n = items.size();
  std::vector<SubsetSum> out(std::size_t{1} << n);
  for (std::uint32_t m = 1; m < out.size(); ++m) {
    std::uint32_t low = m & (~m + 1);
    int bit = __builtin_ctz(low);
    out[m].mask = m;
    out[m].sum = out[m ^ low].sum + items[bit];
  }
  return out;
}

ParetoSet bruteforce_pareto(PointSpan items, std::optional<i64> cap,
                            const OracleLimits& lim) {
  require_small(items, lim);
  const i64 c = cap.value_or(kNoCap);
  if (items.size() <= kLiteralLimit) {
    auto all = enumerate_subsets(items);
    PointSet pts;
    pts.reserve(all.size());
    for (const auto& s : all)
      if (s.sum.weight <= c) pts.push_back(s.sum);
    std::sort(pts.begin(), pts.end(), [](const Point& x, const Point& y) {
      return x.weight != y.weight ? x.weight < y.weight : x.profit > y.profit;
    });
    return ParetoSet::from_sorted(merge_fronts(pts, {}));
  }
  // Every subset sum is produced item by item; a partial sum dominated by
  // another partial sum stays dominated under any common extension.
  PointSet front{{0, 0}};
  for (const auto& it : items) front = extend(front, it, c);
  return ParetoSet::from_sorted(std::move(front));
}

ParetoSet bruteforce_pareto_bounded(PointSpan items, std::size_t max_count,
                                    const OracleLimits& lim) {
  require_small(items, lim);
  const std::size_t K = std::min(max_count, items.size());
  std::vector<PointSet> by_count(K + 1);
  by_count[0] = {{0, 0}};
  for (const auto& it : items)
    for (std::size_t c = K; c >= 1; --c) {
      if (by_count[c - 1].empty()) continue;
      PointSet shifted;
      for (const auto& p : by_count[c - 1]) shifted.push_back(p + it);
      by_count[c] = merge_fronts(by_count[c], shifted);
    }
  PointSet acc;
  for (const auto& f : by_count) acc = merge_fronts(acc, f);
  return ParetoSet::from_sorted(std::move(acc));
}

std::vector<Witnessed> pareto_witnesses(PointSpan items) {
  auto all = enumerate_subsets(items);
  PointSet sums;
  for (const auto& s : all) sums.push_back(s.sum);
  std::sort(sums.begin(), sums.end(), [](const Point& x, const Point& y) {
    return x.weight != y.weight ? x.weight < y.weight : x.profit > y.profit;
  });
  PointSet front = merge_fronts(sums, {});
  std::vector<Witnessed> out;
  for (const auto& p : front) out.push_back({p, {}});
  for (const auto& s : all) {
    auto it = std::lower_bound(out.begin(), out.end(), s.sum.weight,
                               [](const Witnessed& w, i64 x) { return w.point.weight < x; });
    if (it != out.end() && it->point == s.sum) it->masks.push_back(s.mask);
  }
  return out;
}

namespace {

i64 weight_gcd(PointSpan items) {
  i64 g = 0;
  for (const auto& it : items) g = std::gcd(g, it.weight);
  return g == 0 ? 1 : g;
}

}  // namespace

bool dp_feasible(PointSpan items, i64 max_weight, const OracleLimits& lim) {
  if (max_weight < 0) return true;
  const i64 g = weight_gcd(items);
  const i64 cells = (max_weight / g + 1);
  return (i128)cells * (i128)std::max<std::size_t>(items.size(), 1) <= lim.max_grid_dp;
}

ParetoSet exact_pareto_dp(PointSpan items, i64 max_weight,
                          const OracleLimits& lim) {
  if (max_weight < 0) return ParetoSet::from_sorted({});
  if (!dp_feasible(items, max_weight, lim))
    throw OracleLimitError("dp oracle: table exceeds max_grid_dp");
  const i64 g = weight_gcd(items);
  const i64 W = max_weight / g;
  std::vector<i64> best(W + 1, -1);
  best[0] = 0;
  for (const auto& it : items) {
    const i64 w = it.weight / g;
    for (i64 x = W; x >= w; --x)
      if (best[x - w] >= 0) best[x] = std::max(best[x], best[x - w] + it.profit);
  }
  PointSet out;
  for (i64 x = 0; x <= W; ++x)
    if (best[x] > (out.empty() ? -1 : out.back().profit)) out.push_back({x * g, best[x]});
  return ParetoSet::from_sorted(std::move(out));
}

i64 greedy_half_opt(const Instance& inst) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < inst.items.size(); ++i)
    if (inst.items[i].weight <= inst.capacity) idx.push_back(i);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = inst.items[a];
    const auto& y = inst.items[b];
    return (i128)x.profit * y.weight > (i128)y.profit * x.weight;
  });
  i64 w = 0, prefix = 0, single = 0;
  bool open = true;
  for (auto i : idx) {
    const auto& it = inst.items[i];
    single = std::max(single, it.profit);
    if (open && w + it.weight <= inst.capacity) {
      w += it.weight;
      prefix += it.profit;
    } else {
      open = false;
    }
  }
  return std::max(prefix, single);
}

i64 exact_opt(const Instance& inst, const OracleLimits& lim) {
  if (inst.capacity <= 0) return 0;
  if (inst.items.size() <= lim.max_items_bruteforce)
    return bruteforce_pareto(inst.items, inst.capacity, lim).best_within(inst.capacity)->profit;
  return exact_pareto_dp(inst.items, inst.capacity, lim).best_within(inst.capacity)->profit;
}

ParetoSet oracle_front(PointSpan items, const OracleLimits& lim) {
  if (items.size() <= lim.max_items_bruteforce) return bruteforce_pareto(items, std::nullopt, lim);
  return exact_pareto_dp(items, total(items).weight, lim);
}

}  // namespace wk
