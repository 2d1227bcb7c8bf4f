#include "wk/core.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace wk {

ParetoSet ParetoSet::from_sorted(PointSet pts) {
  assert(is_pareto(pts));
  ParetoSet s;
  s.pts_ = std::move(pts);
  return s;
}

std::optional<Point> ParetoSet::best_within(i64 cap) const {
  auto it = std::upper_bound(pts_.begin(), pts_.end(), cap,
                             [](i64 c, const Point& p) { return c < p.weight; });
  if (it == pts_.begin()) return std::nullopt;
  return *std::prev(it);
}

bool normalize_instance(Instance& inst) {
  if (!(inst.eps > 0.0) || !std::isfinite(inst.eps))
    throw std::invalid_argument("eps must be a positive finite number");
  if (inst.capacity < 0) throw std::invalid_argument("capacity must be >= 0");
  for (const auto& it : inst.items)
    if (it.weight <= 0 || it.profit <= 0)
      throw std::invalid_argument("item weights and profits must be positive");
  if (inst.eps > 1.0) {
    inst.eps = 1.0;
    return true;
  }
  return false;
}

std::string ApproxReport::summary() const {
  std::ostringstream os;
  os << (ok ? "ok" : "FAIL") << " checked=" << checked
     << " wratio=" << worst_weight_ratio << " pratio=" << worst_profit_ratio
     << " wslack=" << worst_weight_slack << " pslack=" << worst_profit_slack;
  if (witness) os << " witness=(" << witness->weight << "," << witness->profit << ")";
  return os.str();
}

bool dominates(const Point& a, const Point& b) {
  return a.weight <= b.weight && a.profit >= b.profit &&
         (a.weight < b.weight || a.profit > b.profit);
}

bool is_pareto(PointSpan pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].weight < 0 || pts[i].profit < 0) return false;
    if (i && (pts[i].weight <= pts[i - 1].weight ||
              pts[i].profit <= pts[i - 1].profit))
      return false;
  }
  return true;
}

ParetoSet pareto_filter(PointSpan in) {
  PointSet pts(in.begin(), in.end());
  // weight ascending, and for equal weight the larger profit first
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.weight != b.weight ? a.weight < b.weight : a.profit > b.profit;
  });
  PointSet out;
  out.reserve(pts.size());
  for (const auto& p : pts)
    if (out.empty() || p.profit > out.back().profit) {
      if (!out.empty() && out.back().weight == p.weight) continue;
      out.push_back(p);
    }
  return ParetoSet::from_sorted(std::move(out));
}

ParetoSet pareto_union(PointSpan a, PointSpan b) {
  PointSet all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return pareto_filter(all);
}

PointSet sumset(PointSpan a, PointSpan b) {
  PointSet out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + y);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ParetoSet maxplus_exact(PointSpan a, PointSpan b) {
  return pareto_filter(sumset(a, b));
}

Point total(PointSpan items) {
  Point s;
  for (const auto& p : items) s += p;
  return s;
}

namespace {

using ld = long double;

// Approx set reduced to its front; the best cover for any weight bound is the
// last front point at or under that bound.
struct Front {
  explicit Front(PointSpan pts) : f(pareto_filter(pts)) {}
  const Point* last_within(ld bound) const {
    const auto& v = f.points();
    auto it = std::upper_bound(v.begin(), v.end(), bound,
                               [](ld c, const Point& p) { return c < (ld)p.weight; });
    if (it == v.begin()) return nullptr;
    return &*std::prev(it);
  }
  ParetoSet f;
};

void note_failure(ApproxReport& r, const Point& t) {
  if (r.ok) r.witness = t;
  r.ok = false;
}

}  // namespace

ApproxReport check_factor(PointSpan approx, PointSpan target, double eps) {
  ApproxReport r;
  Front front(approx);
  const ld f = 1.0L + (ld)eps;
  for (const auto& t : target) {
    ++r.checked;
    const Point* c = front.last_within(f * (ld)t.weight);
    if (!c || (ld)c->profit * f < (ld)t.profit) {
      note_failure(r, t);
      r.worst_profit_ratio = std::numeric_limits<double>::infinity();
      continue;
    }
    if (t.weight > 0)
      r.worst_weight_ratio = std::max(r.worst_weight_ratio, (double)c->weight / t.weight);
    if (c->profit > 0)
      r.worst_profit_ratio = std::max(r.worst_profit_ratio, (double)t.profit / c->profit);
    r.worst_weight_slack = std::max(r.worst_weight_slack, (double)(c->weight - t.weight));
    r.worst_profit_slack = std::max(r.worst_profit_slack, (double)(t.profit - c->profit));
  }
  return r;
}

ApproxReport check_additive(PointSpan approx, PointSpan target,
                            const ErrorFn& err) {
  ApproxReport r;
  Front front(approx);
  for (const auto& t : target) {
    ++r.checked;
    auto [dw, dp] = err(t);
    const Point* c = front.last_within((ld)t.weight + (ld)dw);
    if (!c || (ld)c->profit < (ld)t.profit - (ld)dp) {
      note_failure(r, t);
      r.worst_profit_slack = std::numeric_limits<double>::infinity();
      continue;
    }
    if (t.weight > 0)
      r.worst_weight_ratio = std::max(r.worst_weight_ratio, (double)c->weight / t.weight);
    if (c->profit > 0)
      r.worst_profit_ratio = std::max(r.worst_profit_ratio, (double)t.profit / c->profit);
    r.worst_weight_slack = std::max(r.worst_weight_slack, (double)(c->weight - t.weight));
    r.worst_profit_slack = std::max(r.worst_profit_slack, (double)(t.profit - c->profit));
  }
  return r;
}

ApproxReport check_additive(PointSpan approx, PointSpan target, double dw,
                            double dp) {
  return check_additive(approx, target,
                        [=](const Point&) { return std::pair{dw, dp}; });
}

ApproxReport check_dominated_by(PointSpan candidate, PointSpan truth) {
  ApproxReport r;
  Front front(truth);
  for (const auto& c : candidate) {
    ++r.checked;
    const Point* t = front.last_within((ld)c.weight);
    if (!t || t->profit < c.profit) {
      note_failure(r, c);
      if (t) r.worst_profit_slack = std::max(r.worst_profit_slack, (double)(c.profit - t->profit));
    }
  }
  return r;
}

double min_additive_error(PointSpan approx, PointSpan target, double wn,
                          double pn) {
  ParetoSet f = pareto_filter(approx);
  const auto& v = f.points();
  double worst = 0.0;
  for (const auto& t : target) {
    if (v.empty()) return std::numeric_limits<double>::infinity();
    auto cost = [&](std::size_t i) {
      double a = (double)(v[i].weight - t.weight) / wn;
      double b = (double)(t.profit - v[i].profit) / pn;
      return std::max({a, b, 0.0});
    };
    // weight excess grows and profit deficit shrinks along the front
    std::size_t lo = 0, hi = v.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      double a = (double)(v[mid].weight - t.weight) / wn;
      double b = (double)(t.profit - v[mid].profit) / pn;
      if (a >= b) hi = mid; else lo = mid + 1;
    }
    double best = std::numeric_limits<double>::infinity();
    if (lo < v.size()) best = std::min(best, cost(lo));
    if (lo > 0) best = std::min(best, cost(lo - 1));
    worst = std::max(worst, best);
  }
  return worst;
}

PointSet window(PointSpan pts, i64 wmax, i64 pmax) {
  PointSet out;
  for (const auto& p : pts)
    if (p.weight <= wmax && p.profit <= pmax) out.push_back(p);
  return out;
}

}  // namespace wk
