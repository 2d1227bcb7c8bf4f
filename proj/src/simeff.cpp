#include "wk/simeff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "wk/conv.hpp"

namespace wk {

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw BandError("simeff: eps must be in (0,1]");
}

i64 ceil_div(i64 a, i64 b) { return a / b + (a % b != 0); }

}  // namespace

bool EffBand::contains(const Point& p) const {
  if (p.weight == 0) return p.profit == 0;
  Ratio e = efficiency(p);
  return lo <= e && e <= hi;
}

EffBand band_of(PointSpan pts) {
  bool any = false;
  EffBand b{{0, 1}, {0, 1}};
  for (const auto& p : pts) {
    if (p.weight == 0) {
      if (p.profit != 0) throw BandError("band_of: zero weight point with profit");
      continue;
    }
    Ratio e = efficiency(p);
    if (!any || e < b.lo) b.lo = e;
    if (!any || b.hi < e) b.hi = e;
    any = true;
  }
  return b;
}

// ---------------------------------------------------------------------------
// subset sums on the rho line

namespace {

struct SumTree {
  i64 grid;
  i64 cap;
  std::vector<i64> best;  // scratch, one slot per grid cell

  std::vector<i64> run(const std::vector<i64>& w, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return {0, w[lo]};
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    auto a = run(w, lo, mid);
    auto b = run(w, mid, hi);
    // keep the smallest exact sum per cell; a representative never exceeds
    // what it stands for, and each level costs less than one grid unit
    const i64 cells = cap / grid + 1;
    best.assign(cells, std::numeric_limits<i64>::max());
    for (i64 x : a)
      for (i64 y : b) {
        i64 s = x + y;
        if (s > cap) break;
        i64& slot = best[s / grid];
        slot = std::min(slot, s);
      }
    std::vector<i64> out;
    for (i64 v : best)
      if (v != std::numeric_limits<i64>::max()) out.push_back(v);
    return out;
  }
};

}  // namespace

PointSet lower_efficiency_sums(PointSpan items, const Ratio& rho, double eps, i64 cap) {
  check_eps(eps);
  for (const auto& it : items) {
    if (it.weight <= 0) throw BandError("subset sums: item weight must be positive");
    if (efficiency(it) < rho) throw BandError("subset sums: item below the band");
  }
  if (items.empty()) return {{0, 0}};
  std::vector<i64> ws;
  for (const auto& it : items)
    if (it.weight <= cap) ws.push_back(it.weight);
  if (ws.empty()) return {{0, 0}};
  std::sort(ws.begin(), ws.end());
  i64 tot = 0;
  for (i64 w : ws) tot += w;

  std::vector<i64> sums{0};
  for (i64 t = ws.front();; t *= 2) {
    std::size_t n = std::upper_bound(ws.begin(), ws.end(), t) - ws.begin();
    std::vector<i64> active(ws.begin(), ws.begin() + n);
    const int L = std::max(1, ceil_log2(n));
    SumTree tree{std::max<i64>(1, (i64)std::floor(eps * (double)t / (4.0 * L))), std::min(2 * t, cap), {}};
    auto s = tree.run(active, 0, n);
    sums.insert(sums.end(), s.begin(), s.end());
    if (t >= tot || t >= cap) break;
  }
  PointSet pts;
  for (i64 s : sums) pts.push_back({s, mul_floor(rho, s)});
  return pareto_filter(pts).release();
}

PointSet subsetsum_weak(PointSpan items, const Ratio& rho, double eps) {
  for (const auto& it : items)
    if (it.weight <= 0 || !(efficiency(it) == rho))
      throw BandError("subsetsum_weak: mixed efficiencies");
  return lower_efficiency_sums(items, rho, eps);
}

// ---------------------------------------------------------------------------
// 2-D cell sumsets

namespace detail {

namespace {

constexpr std::uint32_t kMod = 998244353, kRoot = 3;

std::uint32_t pw(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kMod;
  for (; e; e >>= 1, b = b * b % kMod)
    if (e & 1) r = r * b % kMod;
  return (std::uint32_t)r;
}

void ntt(std::vector<std::uint32_t>& a, bool invert) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint64_t w = pw(kRoot, (kMod - 1) / len);
    if (invert) w = pw(w, kMod - 2);
    for (std::size_t i = 0; i < n; i += len) {
      std::uint64_t wn = 1;
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::uint64_t u = a[i + k], v = a[i + k + len / 2] * wn % kMod;
        a[i + k] = (std::uint32_t)((u + v) % kMod);
        a[i + k + len / 2] = (std::uint32_t)((u + kMod - v) % kMod);
        wn = wn * w % kMod;
      }
    }
  }
  if (invert) {
    std::uint64_t inv = pw(n, kMod - 2);
    for (auto& x : a) x = (std::uint32_t)(x * inv % kMod);
  }
}

}  // namespace

std::vector<Cell> cell_sumset_direct(const std::vector<Cell>& a, const std::vector<Cell>& b) {
  std::vector<Cell> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back({x.i + y.i, x.j + y.j});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Cell> cell_sumset_ntt(const std::vector<Cell>& a, const std::vector<Cell>& b) {
  if (a.empty() || b.empty()) return {};
  i64 ia = 0, ja = 0, ib = 0, jb = 0;
  for (const auto& c : a) {
    if (c.i < 0 || c.j < 0) throw BandError("cell sumset: negative cell");
    ia = std::max(ia, c.i), ja = std::max(ja, c.j);
  }
  for (const auto& c : b) {
    if (c.i < 0 || c.j < 0) throw BandError("cell sumset: negative cell");
    ib = std::max(ib, c.i), jb = std::max(jb, c.j);
  }
  // counts stay below (|a||b|) so residues equal the true counts
  if ((i128)a.size() * (i128)b.size() >= kMod) return cell_sumset_direct(a, b);
  const i64 J = ja + jb + 1;
  const std::size_t la = (std::size_t)((ia + 1) * J), lb = (std::size_t)((ib + 1) * J);
  std::size_t n = 1;
  while (n < la + lb - 1) n <<= 1;
  std::vector<std::uint32_t> fa(n, 0), fb(n, 0);
  for (const auto& c : a) fa[c.i * J + c.j] = 1;
  for (const auto& c : b) fb[c.i * J + c.j] = 1;
  ntt(fa, false);
  ntt(fb, false);
  for (std::size_t k = 0; k < n; ++k) fa[k] = (std::uint32_t)((std::uint64_t)fa[k] * fb[k] % kMod);
  ntt(fa, true);
  std::vector<Cell> out;
  for (std::size_t k = 0; k < la + lb - 1; ++k)
    if (fa[k]) out.push_back({(i64)k / J, (i64)k % J});
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------

PointSet band_merge(PointSpan a_in, PointSpan b_in, const EffBand& band, double eps, i64 wcap) {
  check_eps(eps);
  if (band.lo.num <= 0 || band.hi < band.lo) throw BandError("band_merge: need 0 < rho <= rho+delta");
  PointSet za, zb;
  for (auto [in, z] : {std::pair{a_in, &za}, std::pair{b_in, &zb}}) {
    for (const auto& p : in) {
      if (!band.contains(p)) throw BandError("band_merge: point outside the declared band");
      if (p.weight <= wcap) z->push_back(p);
    }
    // an empty operand is {(0,0)}; one with every point above the cap has no
    // sum under it
    if (in.empty()) z->push_back({0, 0});
    if (z->empty()) return {};
  }
  const ParetoSet fa = pareto_filter(za), fb = pareto_filter(zb);

  i64 A = std::numeric_limits<i64>::max(), B = 0;
  for (const ParetoSet* s : {&fa, &fb})
    for (const auto& p : *s)
      if (p.weight > 0) A = std::min(A, p.weight), B = std::max(B, p.weight);
  if (B == 0) return {{0, 0}};

  const i64 num = band.lo.num, den = band.lo.den;
  const long double delta = (long double)eps * kBandGridShare;
  // shear: s = (p - rho*w)*den >= 0
  auto shear = [&](const Point& p) { return (i128)p.profit * den - (i128)num * p.weight; };

  PointSet out;
  i64 cap = A;
  for (bool first = true;; first = false, cap *= 2) {
    std::size_t na = 0, nb = 0;
    while (na < fa.size() && fa[na].weight <= cap) ++na;
    while (nb < fb.size() && fb[nb].weight <= cap) ++nb;
    if (na && nb && (first || 2 * (fa[na - 1].weight + fb[nb - 1].weight) > cap)) {
      const i64 gw = std::max<i64>(1, (i64)std::floor(delta * (long double)cap));
      long double gsl = std::floor(delta * (long double)num * (long double)cap);
      const i128 gs = gsl < 1 ? 1 : (i128)gsl;
      auto cells = [&](const ParetoSet& s, std::size_t n) {
        std::map<i64, i64> top;  // per weight cell keep the largest shear cell
        for (std::size_t k = 0; k < n; ++k) {
          i64 i = ceil_div(s[k].weight, gw);
          i64 j = (i64)(shear(s[k]) / gs);
          auto [it, fresh] = top.emplace(i, j);
          if (!fresh) it->second = std::max(it->second, j);
        }
        std::vector<detail::Cell> v;
        for (auto [i, j] : top) v.push_back({i, j});
        return v;
      };
      auto ca = cells(fa, na), cb = cells(fb, nb);
      const double direct = (double)ca.size() * (double)cb.size();
      i64 ia = ca.back().i + cb.back().i + 1, jmax = 0;
      for (const auto& c : ca) jmax = std::max(jmax, c.j);
      i64 jb = 0;
      for (const auto& c : cb) jb = std::max(jb, c.j);
      const double grid = (double)ia * (double)(jmax + jb + 1);
      // profit grows with j, so per weight cell only the top cell matters
      std::vector<i64> top((std::size_t)ia, -1);
      if (direct <= 3.0 * grid * std::log2(grid + 2.0)) {
        for (const auto& x : ca)
          for (const auto& y : cb) {
            i64& t = top[(std::size_t)(x.i + y.i)];
            t = std::max(t, x.j + y.j);
          }
      } else {
        for (const auto& c : detail::cell_sumset_ntt(ca, cb)) top[(std::size_t)c.i] = std::max(top[(std::size_t)c.i], c.j);
      }
      std::vector<detail::Cell> sum;
      for (i64 i = 0; i < ia; ++i)
        if (top[(std::size_t)i] >= 0) sum.push_back({i, top[(std::size_t)i]});
      for (const auto& c : sum) {
        const i64 W = c.i * gw;
        const i64 low = std::max<i64>(0, W - 2 * (gw - 1));
        const i128 pd = (i128)c.j * gs + (i128)num * low;
        if (W <= wcap) out.push_back({W, (i64)(pd / den)});
      }
    }
    if (cap >= 2 * B) break;
  }
  return pareto_filter(out).release();
}

// ---------------------------------------------------------------------------

namespace {

struct ClassPlan {
  std::vector<Ratio> rate;            // class efficiency, ascending
  std::vector<PointSet> members;
};

void validate_items(PointSpan items, const EffBand& band) {
  if (band.lo.num <= 0) throw BandError("simeff: rho must be positive");
  for (const auto& it : items)
    if (it.weight <= 0 || !band.contains(it)) throw BandError("simeff: item outside the band");
}

bool narrow(const EffBand& band, double eps) {
  return band.delta() < (long double)eps * band.rho();
}

ClassPlan make_classes(PointSpan items, const EffBand& band, double eps) {
  const long double rho = band.rho(), step = std::log1p((long double)eps);
  auto rate_of = [&](long k) {
    if (k <= 0) return band.lo;
    return std::max(band.lo, ratio_floor(rho * std::pow(1.0L + eps, (long double)k)));
  };
  std::map<long, PointSet> by;
  for (const auto& it : items) {
    long k = (long)std::floor(std::log(efficiency(it).value() / rho) / step);
    k = std::max(k, 0L);
    while (k > 0 && efficiency(it) < rate_of(k)) --k;
    by[k].push_back(it);
  }
  ClassPlan plan;
  for (auto& [k, v] : by) {
    plan.rate.push_back(rate_of(k));
    plan.members.push_back(std::move(v));
  }
  return plan;
}

PointSet merge_classes(const std::vector<PointSet>& sets, std::size_t lo, std::size_t hi,
                       double eps, i64 cap) {
  if (hi - lo == 1) return sets[lo];
  const std::size_t mid = lo + (hi - lo + 1) / 2;
  PointSet l = merge_classes(sets, lo, mid, eps, cap);
  PointSet r = merge_classes(sets, mid, hi, eps, cap);
  PointSet both = l;
  both.insert(both.end(), r.begin(), r.end());
  EffBand b = band_of(both);
  if (b.lo.num <= 0) return pareto_union(l, r).release();
  return band_merge(l, r, b, eps, cap);
}

}  // namespace

std::size_t efficiency_classes(PointSpan items, const EffBand& band, double eps) {
  validate_items(items, band);
  if (items.empty() || narrow(band, eps)) return 1;
  return make_classes(items, band, eps).rate.size();
}

double similar_eff_factor(double eps, std::size_t classes) {
  const int L = std::max(1, ceil_log2(std::max<std::size_t>(classes, 1)));
  const double e = eps / L;
  if (classes <= 1) return (1 + eps) * (1 + eps);
  return (1 + eps) * (1 + e) * std::pow(1 + kBandFactor * e, L);
}

PointSet similar_eff_solve(PointSpan items, const EffBand& band, double eps, i64 cap) {
  check_eps(eps);
  validate_items(items, band);
  if (items.empty()) return {{0, 0}};
  if (narrow(band, eps)) return lower_efficiency_sums(items, band.lo, eps, cap);
  ClassPlan plan = make_classes(items, band, eps);
  const std::size_t m = plan.rate.size();
  const double e = eps / std::max(1, ceil_log2(m));
  std::vector<PointSet> sets;
  for (std::size_t k = 0; k < m; ++k)
    sets.push_back(lower_efficiency_sums(plan.members[k], plan.rate[k], e, cap));
  return merge_classes(sets, 0, m, e, cap);
}

PointSet approx_add(PointSpan items, const EffBand& band, double eps, i64 cap) {
  return similar_eff_solve(items, band, eps, cap);
}

PointSet approx_del(PointSpan items, const EffBand& band, double eps) {
  check_eps(eps);
  validate_items(items, band);
  if (items.empty()) return {{0, 0}};
  PointSet mirrored;
  for (const auto& it : items) mirrored.push_back({it.profit, it.weight});
  const Point all = total(items);
  PointSet m = similar_eff_solve(mirrored, band.mirrored(), eps);
  PointSet out;
  // a mirrored point (x, y) is dominated by some J with p(J) <= x and
  // w(J) >= y, so the complement of J dominates the reflection
  for (const auto& q : m) out.push_back({all.weight - q.profit, std::max<i64>(0, all.profit - q.weight)});
  return pareto_filter(out).release();
}

}  // namespace wk
