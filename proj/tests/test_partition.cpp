#include <cmath>

#include "doctest.h"
#include "testgen.hpp"
#include "wk/oracle.hpp"
#include "wk/partition.hpp"

using namespace wk;

namespace {

// Items on a unit-u grid with efficiencies clustered around a few values,
// which produces both good and bad groups.
PointSet clustered_items(Rng& rng, std::size_t n, i64 u) {
  PointSet s;
  const int centers = (int)rng.range(1, 4);
  std::vector<double> c;
  for (int i = 0; i < centers; ++i) c.push_back(0.6 + 1.3 * rng.uniform());
  for (std::size_t i = 0; i < n; ++i) {
    i64 w = rng.range(u, 2 * u);
    double e = c[rng.below(c.size())] * (1 + 0.02 * (rng.uniform() - 0.5));
    i64 p = std::clamp<i64>((i64)std::llround(e * (double)w), u, 2 * u);
    s.push_back({w, p});
  }
  return s;
}

}  // namespace

TEST_CASE("sort_by_efficiency") {
  auto s = sort_by_efficiency(PointSet{{1, 2}, {2, 2}});
  CHECK(s.items == PointSet{{1, 2}, {2, 2}});
  auto t = sort_by_efficiency(PointSet{{2, 2}, {3, 3}, {1, 1}, {1, 5}});
  CHECK(t.items == PointSet{{1, 5}, {2, 2}, {3, 3}, {1, 1}});
  CHECK(t.index == std::vector<std::size_t>{3, 0, 1, 2});
  Rng rng(51);
  for (int rep = 0; rep < 100; ++rep) {
    auto items = testgen::random_items(rng, rng.range(0, 30), 1, 9);
    auto r = sort_by_efficiency(items);
    for (std::size_t i = 1; i < r.items.size(); ++i) {
      CHECK(!(efficiency(r.items[i - 1]) < efficiency(r.items[i])));
      if (efficiency(r.items[i - 1]) == efficiency(r.items[i])) CHECK(r.index[i - 1] < r.index[i]);
    }
  }
}

TEST_CASE("breaking_item examples") {
  PointSet s{{2, 3}, {2, 2}, {2, 1}};
  auto b = breaking_item(s, 3);
  CHECK(b.b == 2);
  CHECK(b.item == Point{2, 2});
  auto none = breaking_item(s, 6);
  CHECK(none.b == 4);
  CHECK(!none.item);
  CHECK(breaking_item(s, 0).b == 1);
}

TEST_CASE("proximity bound holds on every pareto witness") {
  Rng rng(52);
  const i64 u = 8;
  std::vector<Ratio> gaps;
  for (i64 k = 1; k <= 24; ++k) gaps.push_back({k, 16});
  for (int rep = 0; rep < 30; ++rep) {
    auto raw = testgen::unit_square_items(rng, 12, u);
    auto sorted = sort_by_efficiency(raw).items;
    for (const auto& w : pareto_witnesses(sorted))
      for (auto mask : w.masks) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < sorted.size(); ++i)
          if (mask >> i & 1) idx.push_back(i);
        for (const auto& g : gaps) {
          CHECK(proximity_check(sorted, idx, Side::Below, g, u));
          CHECK(proximity_check(sorted, idx, Side::Above, g, u));
        }
      }
  }
  PointSet one{{10, 20}, {10, 10}};
  CHECK(proximity_check(one, std::vector<std::size_t>{0}, Side::Below, {100, 1}, 10));
  CHECK_THROWS(proximity_check(one, std::nullopt, Side::Below, {1, 1}, 10));
}

TEST_CASE("partition_116 examples") {
  PointSet items{{10, 15}, {10, 12}, {10, 20}, {10, 11}};
  auto sorted = sort_by_efficiency(items).items;
  // tau = 1 with room for every item in the singleton prefix
  auto p = partition_116(sorted, 0.5, 0.25, 1);
  REQUIRE(p.groups.size() == partition_116_groups(0.5, 0.25, 1));
  for (std::size_t j = 0; j < 4; ++j) CHECK(p.groups[j].size() == 1);
  for (const auto& g : p.groups) CHECK(g.kind == GroupKind::Good);

  PointSet flat(40, Point{10, 13});
  for (const auto& g : partition_116(flat, 1, 0.1, 3).groups) CHECK(g.kind == GroupKind::Good);

  // a cliff between the 5th and 6th items lands inside group [4,8) with tau = 4
  PointSet cliff;
  for (int i = 0; i < 5; ++i) cliff.push_back({100, 190 - i});
  for (int i = 0; i < 15; ++i) cliff.push_back({100, 110 - i});
  auto q = partition_116(cliff, 1, 0.2, 4);
  CHECK(q.groups[0].kind == GroupKind::Good);
  CHECK(q.groups[1].kind == GroupKind::Bad);
  CHECK(q.groups[2].kind == GroupKind::Good);
}

TEST_CASE("partition_116 has at most four bad groups near any breaking item") {
  Rng rng(53);
  for (int rep = 0; rep < 300; ++rep) {
    const i64 u = 1000;
    double alpha = std::vector<double>{0.5, 1, 2}[rep % 3];
    double eps = std::vector<double>{0.05, 0.1, 0.02}[rng.below(3)];
    i64 tau = rng.range(1, 6);
    auto items = rep % 2 ? clustered_items(rng, rng.range(5, 80), u)
                         : testgen::unit_square_items(rng, rng.range(5, 80), u);
    auto s = sort_by_efficiency(items).items;
    auto plan = partition_116(s, alpha, eps, tau);
    std::size_t covered = 0;
    for (const auto& g : plan.groups) covered += g.size();
    REQUIRE(covered == s.size());
    REQUIRE(plan.groups.size() == partition_116_groups(alpha, eps, tau));
    const long double window = (long double)u / (alpha * eps);
    i64 pre = 0;
    for (std::size_t b = 1; b <= s.size(); ++b) {
      if ((long double)pre > window) break;
      auto nb = bad_groups_near(plan, s, efficiency(s[b - 1]));
      CHECK(nb.bad_groups <= 4);
      CHECK(nb.within_tau);
      pre += s[b - 1].weight;
    }
  }
}

TEST_CASE("partition_head examples") {
  PointSet flat(12, Point{10, 15});
  auto p = partition_head(flat, 3);
  REQUIRE(p.groups.size() == 1);
  CHECK(p.groups[0].size() == 12);
  CHECK(p.groups[0].kind == GroupKind::Last);
  CHECK(check_head_observation(p, flat).empty());

  // efficiency 100 - i/4 with tau = 8 drops 2/tau per item
  PointSet steep;
  for (int i = 0; i < 32; ++i) steep.push_back({1000, 100000 - 250 * i});
  auto q = partition_head(steep, 8);
  REQUIRE(q.groups.size() == 4);
  for (const auto& g : q.groups) {
    CHECK(g.kind == GroupKind::Bad);
    CHECK(g.size() == 8);
  }
  CHECK(check_head_observation(q, steep, false).empty());
}

TEST_CASE("partition_head satisfies every observation clause") {
  Rng rng(54);
  for (int rep = 0; rep < 1000; ++rep) {
    const i64 u = 1 << 20;
    auto items = rep % 2 ? clustered_items(rng, rng.range(1, 60), u)
                         : testgen::unit_square_items(rng, rng.range(1, 60), u);
    auto s = sort_by_efficiency(items).items;
    auto plan = partition_head(s, rng.range(1, 10));
    auto fails = check_head_observation(plan, s);
    CHECK_MESSAGE(fails.empty(), (fails.empty() ? "" : fails.front()));
  }
}

TEST_CASE("the literal product bound can break the good-group clause") {
  // with (k'-k) instead of (k'-k+1), efficiencies 2, 1.2, 1.1 and tau = 2
  // would give a good group {2, 1.2} with |I| delta = 1.6
  PointSet s{{10, 20}, {10, 12}, {10, 11}};
  auto plan = partition_head(s, 2);
  REQUIRE(!plan.groups.empty());
  CHECK(plan.groups[0].kind == GroupKind::Bad);
  CHECK(check_head_observation(plan, s).empty());
}

TEST_CASE("cluster_indices examples") {
  CHECK(cluster_indices({1.0L}) == std::vector<std::size_t>{1});
  std::vector<long double> eq(4, 1.0L);
  auto a = cluster_indices(eq);
  CHECK(cluster_inequality_holds(eq, a));
  CHECK(a.size() <= 3);
  std::vector<long double> geo;
  for (int j = 1; j <= 10; ++j) geo.push_back(std::ldexp(1.0L, -j));
  auto g = cluster_indices(geo);
  CHECK(cluster_inequality_holds(geo, g));
  CHECK(g.size() <= 12);
  CHECK_THROWS(cluster_indices({}));
  CHECK_THROWS(cluster_indices({1.0L, 0.0L}));
}

TEST_CASE("cluster_indices fuzz") {
  Rng rng(55);
  for (int rep = 0; rep < 100000; ++rep) {
    std::size_t n = rng.range(1, 16);
    std::vector<long double> d;
    // dyadic values keep every suffix sum exact
    for (std::size_t i = 0; i < n; ++i) d.push_back(std::ldexp((long double)rng.range(1, 64), -(int)rng.range(0, 20)));
    auto idx = cluster_indices(d);
    REQUIRE(cluster_inequality_holds(d, idx));
    long double mx = *std::max_element(d.begin(), d.end()), mn = *std::min_element(d.begin(), d.end());
    REQUIRE((long double)idx.size() <= std::log2(mx / mn) + 3 + 1e-12L);
  }
}

TEST_CASE("partition_tail examples") {
  PointSet s{{100, 100}, {100, 99}, {100, 50}};
  auto p = partition_tail(s, 0.5, 0.02);
  REQUIRE(p.groups.size() == 3);
  for (std::size_t j = 0; j < 3; ++j) CHECK(p.groups[j].size() == 1);
  PointSet flat(9, Point{4, 5});
  CHECK(partition_tail(flat, 1, 0.1).groups.size() == 1);
  CHECK(partition_tail(PointSet{}, 1, 0.1).groups.empty());
}

TEST_CASE("partition_tail groups are maximal and within budget") {
  Rng rng(56);
  for (int rep = 0; rep < 500; ++rep) {
    double alpha = 0.5 + 3 * rng.uniform(), eps = 0.01 + 0.1 * rng.uniform();
    auto items = testgen::unit_square_items(rng, rng.range(1, 50), 1000);
    auto s = sort_by_efficiency(items).items;
    auto plan = partition_tail(s, alpha, eps);
    std::size_t at = 0;
    for (std::size_t j = 0; j < plan.groups.size(); ++j) {
      const auto& g = plan.groups[j];
      CHECK(g.begin == at);
      at = g.end;
      long double budget = std::ldexp((long double)alpha * eps, (int)j - 1);
      CHECK(g.delta.value() <= budget);
      if (g.end < s.size()) CHECK(gap(efficiency(s[g.begin]), efficiency(s[g.end])).value() > budget);
    }
    CHECK(at == s.size());
  }
}
