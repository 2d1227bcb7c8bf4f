// Sweeps oracle-sized instances and prints the constants frozen in
// include/wk/calibration.hpp: twice the largest normalized error observed.
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "wk/algo.hpp"
#include "wk/bench.hpp"
#include "wk/calibration.hpp"
#include "wk/gen.hpp"
#include "wk/oracle.hpp"
#include "wk/reduce.hpp"
#include "wk/rng.hpp"

using namespace wk;

namespace {

const std::vector<double> kEps{0.5, 0.25, 0.1};
constexpr int kSeeds = 200;
constexpr std::size_t kMaxN = 24;

PointSet box_items(Rng& rng, std::size_t n, int kind) {
  const i64 u = kRpUnit;
  PointSet s;
  for (std::size_t i = 0; i < n; ++i) {
    i64 w = rng.range(u, 2 * u), p;
    if (kind == 0) {
      p = rng.range(u, 2 * u);
    } else {
      // plateaus for kind 1, one narrow band for kind 2
      double e = kind == 1 ? 2.0 / (1 + (double)rng.below(3)) : 1.2 + 0.01 * rng.uniform();
      p = std::clamp<i64>((i64)std::llround(e * (double)w), u, 2 * u);
    }
    s.push_back({w, p});
  }
  return s;
}

double alpha_for(Strategy s, double eps, Rng& rng) {
  double hi = rp_alpha_max(eps);
  if (s != Strategy::ColorCodingOnly) hi = std::min(hi, color_coding_threshold(s, eps));
  hi = std::max(hi, 0.5);
  return 0.5 * std::pow(hi / 0.5, rng.uniform());
}

}  // namespace

int main() {
  OracleLimits lim;
  lim.max_items_bruteforce = kMaxN;

  double rp_worst = 0;
  for (auto st : {Strategy::Exp116, Strategy::Exp74, Strategy::ColorCodingOnly})
    for (double eps : kEps) {
      double worst = 0;
      for (int seed = 0; seed < kSeeds; ++seed) {
        Rng rng(1000003u * (unsigned)st + 7919u * (unsigned)(eps * 1000) + (unsigned)seed);
        RpInstance rp;
        rp.alpha = alpha_for(st, eps, rng);
        rp.items = box_items(rng, (std::size_t)rng.range(1, kMaxN), seed % 3);
        auto out = solve_rp(rp, SolverConfig{eps, (std::uint64_t)seed, st});
        auto front = bruteforce_pareto(rp.items, std::nullopt, lim);
        auto win = window(front, rp_window(rp, eps), std::numeric_limits<i64>::max());
        const double err = min_additive_error(out, win, (double)rp.unit, (double)rp.unit) * rp.alpha;
        worst = std::max(worst, err);
      }
      std::printf("rp   %-9s eps=%-5g max alpha*err = %.4f\n", to_string(st), eps, worst);
      rp_worst = std::max(rp_worst, worst);
    }

  double weak_worst = 0;
  for (auto fam : all_families())
    for (double eps : kEps) {
      double wp = 0, ww = 0, wa = 0;
      for (int seed = 0; seed < kSeeds; ++seed) {
        GeneratorSpec g;
        g.family = fam;
        g.seed = 7777u * (unsigned)fam + (unsigned)seed + (unsigned)(eps * 1e4);
        g.n = (std::size_t)Rng(g.seed).range(1, kMaxN);
        g.eps = eps;
        g.capacity_fraction = 0.1 + 0.8 * Rng(g.seed + 1).uniform();
        g.tau = 1 + g.seed % 8;
        Instance inst = generate(g).inst;
        auto res = solve_weak(inst, make_rp_solver(Strategy::Auto), g.seed);
        auto front = bruteforce_pareto(inst.items, std::nullopt, lim);
        const i64 opt = front.best_within(inst.capacity)->profit;
        if (opt > 0)
          wp = std::max(wp, res.answer.profit > 0 ? ((double)opt / (double)res.answer.profit - 1) / eps : 1e9);
        if (inst.capacity > 0) ww = std::max(ww, ((double)res.answer.weight / (double)inst.capacity - 1) / eps);
        wa = std::max(wa, realized_additive_error(res.set, front, inst.capacity, eps));
      }
      std::printf("weak %-16s eps=%-5g profit=%.4f weight=%.4f additive=%.4f\n", to_string(fam), eps, wp, ww, wa);
      weak_worst = std::max({weak_worst, wp, ww, wa});
    }

  auto up = [](double v) { return std::ceil(v * 100) / 100; };
  std::printf("\nkRpC   = %.2f (2 x %.4f)\n", up(2 * rp_worst), rp_worst);
  std::printf("kWeakC = %.2f (2 x %.4f, at least kWeakSelectC = %g)\n", std::max(kWeakSelectC, up(2 * weak_worst)),
              weak_worst, kWeakSelectC);
  return 0;
}
