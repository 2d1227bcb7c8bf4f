#include "doctest.h"
#include "testgen.hpp"
#include "wk/oracle.hpp"
#include "wk/simeff.hpp"

using namespace wk;

namespace {

const EffBand kUnit{{1, 1}, {1, 1}};

PointSet front_of(const PointSet& items) { return bruteforce_pareto(items).release(); }

EffBand band_for(const PointSet& items) { return band_of(items); }

}  // namespace

TEST_CASE("subsetsum_weak examples") {
  PointSet three{{1, 1}, {1, 1}, {1, 1}};
  auto out = subsetsum_weak(three, {1, 1}, 0.01);
  CHECK(out == PointSet{{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  CHECK(subsetsum_weak(PointSet{}, {1, 1}, 0.1) == PointSet{{0, 0}});
  CHECK(subsetsum_weak(PointSet{{7, 14}}, {2, 1}, 0.1) == PointSet{{0, 0}, {7, 14}});
  CHECK_THROWS_AS(subsetsum_weak(PointSet{{1, 1}, {2, 3}}, {1, 1}, 0.1), BandError);
}

TEST_CASE("lower_efficiency_sums contracts") {
  Rng rng(41);
  for (int rep = 0; rep < 200; ++rep) {
    double eps = std::vector<double>{1.0, 0.5, 0.2, 0.05}[rep % 4];
    i64 u = rng.range(1, 3) == 1 ? 10 : 100000;
    auto items = testgen::banded_items(rng, rng.range(1, 12), u, 1.0, 0.0);
    for (auto& it : items) it.profit = it.weight;
    auto out = lower_efficiency_sums(items, {1, 1}, eps);
    auto exact = front_of(items);
    CHECK(check_factor(out, exact, eps).ok);
    CHECK(check_dominated_by(out, exact).ok);
    CHECK(is_pareto(out));
  }
}

TEST_CASE("cell sumset transform is exact up to 64x64") {
  Rng rng(42);
  for (int rep = 0; rep < 60; ++rep) {
    i64 side = rng.range(1, 64);
    std::vector<detail::Cell> a, b;
    for (int k = 0, n = (int)rng.range(1, 40); k < n; ++k) a.push_back({rng.range(0, side - 1), rng.range(0, side - 1)});
    for (int k = 0, n = (int)rng.range(1, 40); k < n; ++k) b.push_back({rng.range(0, side - 1), rng.range(0, side - 1)});
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    CHECK(detail::cell_sumset_ntt(a, b) == detail::cell_sumset_direct(a, b));
  }
  std::vector<detail::Cell> full;
  for (i64 i = 0; i < 64; ++i)
    for (i64 j = 0; j < 64; ++j) full.push_back({i, j});
  CHECK(detail::cell_sumset_ntt(full, full).size() == 127u * 127u);
}

TEST_CASE("band_merge examples") {
  PointSet a{{0, 0}, {4, 8}, {6, 12}};
  PointSet b{{0, 0}, {5, 10}};
  EffBand flat{{2, 1}, {2, 1}};
  auto out = band_merge(a, b, flat, 0.01);
  for (const auto& p : out) CHECK(p.profit == 2 * p.weight);
  CHECK(out == maxplus_exact(a, b).points());
  // identity operand
  CHECK(band_merge(PointSet{{0, 0}}, a, flat, 0.01) == a);
  CHECK_THROWS_AS(band_merge(PointSet{{3, 1}}, a, flat, 0.1), BandError);
  CHECK_THROWS_AS(band_merge(PointSet{{0, 1}}, a, flat, 0.1), BandError);
}

TEST_CASE("band_merge contracts on random banded sets") {
  Rng rng(43);
  for (int rep = 0; rep < 300; ++rep) {
    double eps = std::vector<double>{1.0, 0.5, 0.2, 0.1}[rep % 4];
    double spread = std::vector<double>{0.0, 0.05, 0.5, 2.0}[rng.range(0, 3)];
    i64 u = rng.range(1, 3) == 1 ? 20 : 50000;
    auto ia = testgen::banded_items(rng, rng.range(0, 6), u, 1.5, spread);
    auto ib = testgen::banded_items(rng, rng.range(0, 6), u, 1.5, spread);
    auto a = front_of(ia), b = front_of(ib);
    PointSet both = a;
    both.insert(both.end(), b.begin(), b.end());
    EffBand band = band_of(both);
    if (band.lo.num == 0) continue;
    auto out = band_merge(a, b, band, eps);
    CHECK(check_factor(out, maxplus_exact(a, b).points(), kBandFactor * eps).ok);
    CHECK(check_dominated_by(out, sumset(a, b)).ok);
  }
}

TEST_CASE("shear round trip is the identity on a flat band with a fine grid") {
  Rng rng(44);
  for (int rep = 0; rep < 50; ++rep) {
    PointSet a{{0, 0}}, b{{0, 0}};
    for (int k = 0; k < 5; ++k) a.push_back({rng.range(1, 30), 0});
    for (int k = 0; k < 5; ++k) b.push_back({rng.range(1, 30), 0});
    for (auto* s : {&a, &b})
      for (auto& p : *s) p.profit = 3 * p.weight;
    CHECK(band_merge(a, b, {{3, 1}, {3, 1}}, 0.01) == maxplus_exact(a, b).points());
  }
}

TEST_CASE("similar_eff_solve examples") {
  PointSet same{{2, 3}, {4, 6}, {6, 9}};
  EffBand b{{3, 2}, {3, 2}};
  CHECK(similar_eff_solve(same, b, 0.1) == subsetsum_weak(same, {3, 2}, 0.1));
  CHECK(efficiency_classes(same, b, 0.1) == 1);

  PointSet two{{10, 10}, {12, 12}, {15, 15}, {10, 20}, {11, 22}, {14, 28}};
  EffBand wide{{1, 1}, {2, 1}};
  CHECK(efficiency_classes(two, wide, 0.25) == 2);
  auto out = similar_eff_solve(two, wide, 0.25);
  auto exact = front_of(two);
  CHECK(check_factor(out, exact, similar_eff_factor(0.25, 2) - 1).ok);
  CHECK(check_dominated_by(out, exact).ok);

  CHECK_THROWS_AS(similar_eff_solve(PointSet{{1, 3}}, wide, 0.1), BandError);
  CHECK_THROWS_AS(similar_eff_solve(two, EffBand{{0, 1}, {2, 1}}, 0.1), BandError);
}

TEST_CASE("narrow band with distinct profits loses at most the profit rounding") {
  Rng rng(45);
  for (int rep = 0; rep < 100; ++rep) {
    double eps = 0.2;
    auto items = testgen::banded_items(rng, rng.range(1, 10), 1000, 1.3, 0.1);
    EffBand band = band_for(items);
    REQUIRE(band.delta() < eps * band.rho());
    auto out = similar_eff_solve(items, band, eps);
    auto exact = front_of(items);
    CHECK(check_factor(out, exact, similar_eff_factor(eps, 1) - 1).ok);
    CHECK(check_dominated_by(out, exact).ok);
  }
}

TEST_CASE("similar_eff_solve factor on random wide bands") {
  Rng rng(46);
  for (int rep = 0; rep < 200; ++rep) {
    double eps = std::vector<double>{0.5, 0.25, 0.1}[rep % 3];
    double spread = std::vector<double>{0.3, 1.0, 3.0}[rng.range(0, 2)];
    i64 u = rng.range(1, 2) == 1 ? 1000 : 1000000;
    auto items = testgen::banded_items(rng, rng.range(1, 12), u, 0.7, spread);
    EffBand band = band_for(items);
    auto out = similar_eff_solve(items, band, eps);
    auto exact = front_of(items);
    double f = similar_eff_factor(eps, efficiency_classes(items, band, eps));
    CHECK(check_factor(out, exact, f - 1).ok);
    CHECK(check_dominated_by(out, exact).ok);
    auto add = check_additive(out, exact, [&](const Point& p) {
      return std::pair{(f - 1) * (double)p.weight, (f - 1) * (double)p.profit};
    });
    CHECK(add.ok);
  }
}

TEST_CASE("approx_add empty and additive form") {
  CHECK(approx_add(PointSet{}, kUnit, 0.3) == PointSet{{0, 0}});
  CHECK(approx_del(PointSet{}, kUnit, 0.3) == PointSet{{0, 0}});
}

TEST_CASE("S+ and S- duality by brute force") {
  Rng rng(47);
  for (int rep = 0; rep < 100; ++rep) {
    auto items = testgen::random_items(rng, rng.range(0, 12), 1, 30);
    Point all = total(items);
    PointSet mirrored;
    for (const auto& it : items) mirrored.push_back({it.profit, it.weight});
    // lower-left front of the mirrored set = upper-left front of complements
    PointSet flipped;
    for (const auto& s : enumerate_subsets(mirrored)) flipped.push_back({all.weight - s.sum.profit, all.profit - s.sum.weight});
    CHECK(pareto_filter(flipped) == bruteforce_pareto(items));
  }
}

TEST_CASE("approx_del examples") {
  PointSet i{{1, 1}, {2, 2}};
  auto out = approx_del(i, kUnit, 0.01);
  CHECK(out == PointSet{{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  // the full set is reproduced exactly
  Rng rng(48);
  for (int rep = 0; rep < 50; ++rep) {
    auto items = testgen::banded_items(rng, rng.range(1, 10), 1000, 1.0, 0.8);
    auto o = approx_del(items, band_for(items), 0.3);
    CHECK(std::find(o.begin(), o.end(), total(items)) != o.end());
  }
}

TEST_CASE("approx_del complement scaled additive error") {
  Rng rng(49);
  for (int rep = 0; rep < 200; ++rep) {
    double eps = std::vector<double>{0.5, 0.25, 0.1}[rep % 3];
    auto items = testgen::banded_items(rng, rng.range(1, 12), 5000, 1.2, 1.5);
    EffBand band = band_for(items);
    Point all = total(items);
    auto out = approx_del(items, band, eps);
    auto exact = front_of(items);
    PointSet mirrored;
    for (const auto& it : items) mirrored.push_back({it.profit, it.weight});
    double f = similar_eff_factor(eps, efficiency_classes(mirrored, band.mirrored(), eps));
    CHECK(check_dominated_by(out, exact).ok);
    CHECK(check_additive(out, exact, [&](const Point& p) {
      return std::pair{(f - 1) * (double)(all.weight - p.weight), (f - 1) * (double)(all.profit - p.profit)};
    }).ok);
  }
}
