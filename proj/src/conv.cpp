#include "wk/conv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wk {

namespace {

i64 ceil_div(i64 a, i64 b) { return a / b + (a % b != 0); }

std::vector<i64> caps(i64 lo, i64 hi) {
  std::vector<i64> out;
  i64 c = lo;
  for (;;) {
    out.push_back(c);
    if (c >= 2 * hi) break;
    c *= 2;
  }
  return out;
}

PointSet with_zero_if_empty(PointSpan s) {
  if (s.empty()) return {{0, 0}};
  return PointSet(s.begin(), s.end());
}

}  // namespace

int ceil_log2(std::size_t m) {
  int l = 0;
  while ((std::size_t{1} << l) < m) ++l;
  return l;
}

ParetoSet bm_maxplus_kernel(PointSpan a, PointSpan b, i64 bound, Kernel) {
  if (!is_pareto(a) || !is_pareto(b)) throw ConvError("kernel: inputs must be monotone");
  auto in_bound = [&](PointSpan s) {
    return std::all_of(s.begin(), s.end(), [&](const Point& p) {
      return p.weight <= bound && p.profit <= bound;
    });
  };
  if (bound < 0 || !in_bound(a) || !in_bound(b)) throw ConvError("kernel: entries exceed bound");
  if (a.empty() || b.empty()) return {};
  std::vector<i64> best(2 * bound + 1, -1);
  for (const auto& x : a)
    for (const auto& y : b) {
      i64& slot = best[x.weight + y.weight];
      slot = std::max(slot, x.profit + y.profit);
    }
  PointSet out;
  for (i64 w = 0; w <= 2 * bound; ++w)
    if (best[w] > (out.empty() ? -1 : out.back().profit)) out.push_back({w, best[w]});
  return ParetoSet::from_sorted(std::move(out));
}

ConvRange range_of(PointSpan a, PointSpan b) {
  ConvRange r{std::numeric_limits<i64>::max(), 0, std::numeric_limits<i64>::max(), 0};
  for (PointSpan s : {a, b})
    for (const auto& p : s) {
      if (p.weight > 0) r.A = std::min(r.A, p.weight);
      if (p.profit > 0) r.C = std::min(r.C, p.profit);
      r.B = std::max(r.B, p.weight);
      r.D = std::max(r.D, p.profit);
    }
  if (r.B == 0) r.A = r.B = 1;
  if (r.D == 0) r.C = r.D = 1;
  return r;
}

int subrange_count(i64 lo, i64 hi) { return (int)caps(lo, hi).size(); }

double pair_size_bound(double eps, const ConvRange& r) {
  return kPairSizeK / eps * subrange_count(r.A, r.B) * subrange_count(r.C, r.D);
}

PointSet approx_conv_pair(PointSpan a_in, PointSpan b_in, const ConvConfig& cfg,
                          const ConvRange& r) {
  if (!(cfg.eps > 0.0 && cfg.eps <= 1.0)) throw ConvError("conv: eps must be in (0,1]");
  if (r.A < 1 || r.A > r.B || r.C < 1 || r.C > r.D) throw ConvError("conv: invalid range");
  const ParetoSet fa = pareto_filter(with_zero_if_empty(a_in));
  const ParetoSet fb = pareto_filter(with_zero_if_empty(b_in));
  for (const ParetoSet* s : {&fa, &fb})
    for (const auto& p : *s) {
      bool wok = p.weight == 0 || (p.weight >= r.A && p.weight <= r.B);
      bool pok = p.profit == 0 || (p.profit >= r.C && p.profit <= r.D);
      if (!wok || !pok) throw ConvError("conv: point outside declared range");
    }

  const double delta = cfg.eps * kPairGridShare;
  const auto wc = caps(r.A, r.B);
  const auto pc = caps(r.C, r.D);

  // Both fronts are sorted with increasing profit, so the points inside a
  // cap box form a prefix.
  auto prefix_len = [](const ParetoSet& s, i64 wcap, i64 pcap) {
    std::size_t k = 0;
    while (k < s.size() && s[k].weight <= wcap && s[k].profit <= pcap) ++k;
    return k;
  };

  PointSet out;
  PointSet sa, sb;
  for (std::size_t i = 0; i < wc.size(); ++i)
    for (std::size_t j = 0; j < pc.size(); ++j) {
      const i64 aw = wc[i], bp = pc[j];
      const std::size_t na = prefix_len(fa, aw, bp), nb = prefix_len(fb, aw, bp);
      if (!na || !nb) continue;
      const Point ta = fa[na - 1], tb = fb[nb - 1];
      // tuples of this box only matter when they exceed half the cap
      if (i > 0 && 2 * (ta.weight + tb.weight) <= aw) continue;
      if (j > 0 && 2 * (ta.profit + tb.profit) <= bp) continue;

      const i64 gw = std::max<i64>(1, (i64)std::floor(delta * (double)aw));
      const i64 gp = std::max<i64>(1, (i64)std::floor(delta * (double)bp));
      auto snap = [&](const ParetoSet& s, std::size_t n, PointSet& dst) {
        PointSet tmp;
        tmp.reserve(n);
        for (std::size_t k = 0; k < n; ++k)
          tmp.push_back({ceil_div(s[k].weight, gw), s[k].profit / gp});
        dst = pareto_filter(tmp).release();
      };
      snap(fa, na, sa);
      snap(fb, nb, sb);
      const i64 bound = std::max(ceil_div(aw, gw), bp / gp);
      ParetoSet c = bm_maxplus_kernel(sa, sb, bound, cfg.kernel);
      for (const auto& p : c) out.push_back({p.weight * gw, p.profit * gp});
    }
  return pareto_filter(out).release();
}

PointSet approx_conv_pair(PointSpan a, PointSpan b, const ConvConfig& cfg) {
  return approx_conv_pair(a, b, cfg, range_of(a, b));
}

double merge_many_factor(double eps, std::size_t m) {
  if (m <= 1) return 1.0;
  const int L = ceil_log2(m);
  return std::pow(1.0 + kPairFactor * eps / L, L);
}

namespace {

PointSet merge_rec(const std::vector<PointSet>& sets, std::size_t lo, std::size_t hi,
                   const ConvConfig& cfg) {
  if (hi - lo == 1) return pareto_filter(with_zero_if_empty(sets[lo])).release();
  const std::size_t mid = lo + (hi - lo + 1) / 2;
  PointSet l = merge_rec(sets, lo, mid, cfg);
  PointSet r = merge_rec(sets, mid, hi, cfg);
  return approx_conv_pair(l, r, cfg);
}

}  // namespace

PointSet merge_many(const std::vector<PointSet>& sets, const ConvConfig& cfg) {
  if (sets.empty()) return {{0, 0}};
  ConvConfig inner = cfg;
  if (sets.size() > 1) inner.eps = cfg.eps / ceil_log2(sets.size());
  return merge_rec(sets, 0, sets.size(), inner);
}

}  // namespace wk
