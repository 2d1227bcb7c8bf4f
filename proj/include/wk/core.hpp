#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wk {

using i64 = std::int64_t;
using i128 = __int128;

// A (weight, profit) tuple. Coordinates are integers on whatever grid the
// calling stage declared; the set algebra never rescales.
struct Point {
  i64 weight = 0;
  i64 profit = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
  Point& operator+=(const Point& o) {
    weight += o.weight;
    profit += o.profit;
    return *this;
  }
  friend Point operator+(Point a, const Point& b) { return a += b; }
};

using PointSet = std::vector<Point>;
using PointSpan = std::span<const Point>;

// Weight-sorted, dominance free. Both coordinates strictly increase.
class ParetoSet {
 public:
  ParetoSet() = default;

  // Caller promises the invariant; checked in debug builds only.
  static ParetoSet from_sorted(PointSet pts);

  const PointSet& points() const { return pts_; }
  PointSet release() && { return std::move(pts_); }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const Point& operator[](std::size_t i) const { return pts_[i]; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }
  operator PointSpan() const { return pts_; }

  // Largest profit among points with weight <= cap, nullopt if none.
  std::optional<Point> best_within(i64 cap) const;

  friend bool operator==(const ParetoSet&, const ParetoSet&) = default;

 private:
  PointSet pts_;
};

struct Instance {
  PointSet items;
  i64 capacity = 0;
  double eps = 1.0;
};

// Validates the instance (positive items, nonnegative capacity, eps > 0) and
// clamps eps to 1. Returns true when the clamp fired.
bool normalize_instance(Instance& inst);

struct ApproxReport {
  bool ok = true;
  double worst_weight_ratio = 1.0;
  double worst_profit_ratio = 1.0;
  double worst_weight_slack = 0.0;
  double worst_profit_slack = 0.0;
  std::optional<Point> witness;  // first target point that was not covered
  std::size_t checked = 0;

  std::string summary() const;
};

bool dominates(const Point& a, const Point& b);
bool is_pareto(PointSpan pts);

ParetoSet pareto_filter(PointSpan pts);
ParetoSet pareto_union(PointSpan a, PointSpan b);

PointSet sumset(PointSpan a, PointSpan b);
ParetoSet maxplus_exact(PointSpan a, PointSpan b);

Point total(PointSpan items);

ApproxReport check_factor(PointSpan approx, PointSpan target, double eps);
ApproxReport check_additive(PointSpan approx, PointSpan target, double dw,
                            double dp);
// Per target point error allowance, e.g. (eps*w, eps*p) or complement scaled.
using ErrorFn = std::function<std::pair<double, double>(const Point&)>;
ApproxReport check_additive(PointSpan approx, PointSpan target,
                            const ErrorFn& err);
ApproxReport check_dominated_by(PointSpan candidate, PointSpan truth);

// Smallest d such that every target point has an approx point with
// w' <= w + d*wn and p' >= p - d*pn. Infinity if some target is uncoverable.
double min_additive_error(PointSpan approx, PointSpan target, double wn = 1.0,
                          double pn = 1.0);

// Keep points inside [0,wmax] x [0,pmax].
PointSet window(PointSpan pts, i64 wmax, i64 pmax);

}  // namespace wk
