#include "wk/colorcode.hpp"

#include <cmath>
#include <map>

namespace wk {

std::vector<std::size_t> random_assignment(std::size_t n, std::size_t parts, Rng& rng) {
  if (parts < 1) throw std::invalid_argument("random_assignment: parts must be >= 1");
  std::vector<std::size_t> a(n);
  for (auto& x : a) x = (std::size_t)rng.below(parts);
  return a;
}

std::vector<PointSet> random_partition(PointSpan items, std::size_t parts, Rng& rng) {
  auto a = random_assignment(items.size(), parts, rng);
  std::vector<PointSet> g(parts);
  for (std::size_t i = 0; i < items.size(); ++i) g[a[i]].push_back(items[i]);
  return g;
}

int color_coding_rounds(double q) {
  if (!(q > 0 && q < 1)) throw std::invalid_argument("color coding: q must be in (0,1)");
  return std::max(1, (int)std::ceil(std::log2(1.0 / q) - 1e-12));
}

i64 second_layer_k(i64 k, double q) {
  return std::max<i64>(1, (i64)std::ceil(6.0 * std::log2((double)k / q)));
}

PointSet color_coding(PointSpan items, i64 k, double q, double eps, Rng& rng) {
  if (k < 1) throw std::invalid_argument("color coding: k must be >= 1");
  const int rounds = color_coding_rounds(q);
  if (items.empty()) return {{0, 0}};
  const std::size_t parts = (std::size_t)std::min<i128>((i128)k * k, i128{1} << 62);
  const ConvConfig cfg{eps};
  PointSet all;
  for (int r = 0; r < rounds; ++r) {
    auto a = random_assignment(items.size(), parts, rng);
    // only nonempty buckets matter; an empty one is {(0,0)}
    std::map<std::size_t, PointSet> buckets;
    for (std::size_t i = 0; i < items.size(); ++i) {
      auto& b = buckets[a[i]];
      if (b.empty()) b.push_back({0, 0});
      b.push_back(items[i]);
    }
    std::vector<PointSet> sets;
    for (auto& [id, b] : buckets) sets.push_back(std::move(b));
    auto merged = merge_many(sets, cfg);
    all.insert(all.end(), merged.begin(), merged.end());
  }
  return pareto_filter(all).release();
}

PointSet color_coding(PointSpan items, const ColorCodeConfig& cfg, double eps) {
  Rng rng(cfg.seed);
  return color_coding(items, cfg.k, cfg.q, eps, rng);
}

PointSet two_layer_color_coding(PointSpan items, i64 k, double q, double eps, Rng& rng) {
  if (k < 1) throw std::invalid_argument("two layer: k must be >= 1");
  if (items.empty()) return {{0, 0}};
  Rng first = rng.split(0);
  auto groups = random_partition(items, (std::size_t)k, first);
  const i64 k2 = second_layer_k(k, q);
  std::vector<PointSet> results;
  for (std::size_t j = 0; j < groups.size(); ++j) {
    if (groups[j].empty()) continue;
    Rng child = rng.split(j + 1);
    results.push_back(color_coding(groups[j], k2, q, eps, child));
  }
  return merge_many(results, ConvConfig{eps});
}

double color_coding_factor(double eps) { return std::exp(kPairFactor * eps); }
double two_layer_factor(double eps) { return std::exp(2 * kPairFactor * eps); }

double failure_q(std::size_t n, double eps, int exponent) {
  return std::pow((double)n + 1.0 / eps, -(double)exponent);
}

PointSet solve_rp_large_alpha(const RpInstance& rp, double eps, Rng& rng, int exponent) {
  validate_rp(rp, eps);
  if (rp.items.empty()) return {{0, 0}};
  const i64 g = std::max<i64>(1, (i64)std::floor(eps * (double)rp.unit));
  PointSet snapped;
  for (const auto& it : rp.items)
    snapped.push_back({(it.weight + g - 1) / g * g, it.profit / g * g});
  const i64 k = std::max<i64>(1, (i64)std::ceil(1.0L / ((long double)rp.alpha * eps) - 1e-12L));
  const double q = failure_q(rp.items.size(), eps, exponent);
  return two_layer_color_coding(snapped, k, q, eps, rng);
}

double large_alpha_factor(double eps) { return (1 + eps) * two_layer_factor(eps); }

}  // namespace wk
