#include "wk/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wk {

Gap gap(const Ratio& hi, const Ratio& lo) {
  return {(i128)hi.num * lo.den - (i128)lo.num * hi.den, (i128)hi.den * lo.den};
}

SortedItems sort_by_efficiency(PointSpan items) {
  SortedItems s;
  s.index.resize(items.size());
  std::iota(s.index.begin(), s.index.end(), std::size_t{0});
  std::stable_sort(s.index.begin(), s.index.end(), [&](std::size_t a, std::size_t b) {
    return efficiency(items[b]) < efficiency(items[a]);
  });
  for (auto i : s.index) s.items.push_back(items[i]);
  return s;
}

Breaking breaking_item(PointSpan sorted, i64 w_star) {
  i64 pre = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    pre += sorted[i].weight;
    if (pre > w_star) return {i + 1, sorted[i]};
  }
  return {sorted.size() + 1, std::nullopt};
}

bool proximity_check(PointSpan sorted, const std::optional<std::vector<std::size_t>>& witness,
                     Side side, const Ratio& g, i64 unit) {
  if (!witness) throw std::invalid_argument("proximity_check: witness required");
  std::vector<char> in(sorted.size(), 0);
  i64 w_star = 0;
  for (auto i : *witness) {
    if (i >= sorted.size() || in[i]) throw std::invalid_argument("proximity_check: bad witness");
    in[i] = 1;
    w_star += sorted[i].weight;
  }
  Breaking br = breaking_item(sorted, w_star);
  if (!br.item) return true;
  const Point pb = *br.item;
  i64 w = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Point& it = sorted[i];
    // eff ± gap against rho_b, all cross multiplied
    i128 lhs = ((i128)it.profit * g.den) * pb.weight;
    i128 shift = ((i128)g.num * it.weight) * pb.weight;
    i128 rhs = ((i128)pb.profit * it.weight) * g.den;
    if (side == Side::Below) {
      if (lhs + shift <= rhs && in[i]) w += it.weight;
    } else {
      if (lhs - shift >= rhs && !in[i]) w += it.weight;
    }
  }
  return (i128)w * g.num <= (i128)2 * unit * g.den;
}

const char* to_string(GroupKind k) {
  switch (k) {
    case GroupKind::Good: return "good";
    case GroupKind::Bad: return "bad";
    case GroupKind::Head: return "head";
    case GroupKind::Tail: return "tail";
    case GroupKind::Last: return "last";
  }
  return "?";
}

namespace {

void check_coords(PointSpan items) {
  for (const auto& it : items)
    if (it.weight <= 0 || it.profit < 0 || it.weight >= (i64{1} << 31) || it.profit >= (i64{1} << 31))
      throw std::invalid_argument("partition: coordinates must be in (0, 2^31)");
}

Gap spread(PointSpan s, std::size_t a, std::size_t b) {  // e_a - e_b
  return gap(efficiency(s[a]), efficiency(s[b]));
}

}  // namespace

std::size_t partition_116_groups(double alpha, double eps, i64 tau) {
  return (std::size_t)std::ceil(1.0L / ((long double)alpha * eps * tau)) + 3;
}

GroupPlan partition_116(PointSpan sorted, double alpha, double eps, i64 tau) {
  if (tau < 1) throw std::invalid_argument("partition_116: tau must be >= 1");
  check_coords(sorted);
  const std::size_t m = partition_116_groups(alpha, eps, tau), n = sorted.size();
  GroupPlan plan;
  plan.tau = tau;
  std::size_t k = 0;
  for (std::size_t j = 0; j + 2 < m; ++j) {
    std::size_t e = std::min(n, k + (std::size_t)tau);
    plan.groups.push_back(Group{k, e, GroupKind::Good, {}, {}});
    k = e;
  }
  std::size_t split = k;
  if (k < n) {
    split = k + 1;
    while (split < n && spread(sorted, k, split).times_at_most_one(tau)) ++split;
  }
  plan.groups.push_back(Group{k, split, GroupKind::Good, {}, {}});
  plan.groups.push_back(Group{split, n, GroupKind::Good, {}, {}});
  for (auto& g : plan.groups) {
    if (!g.empty()) g.delta = spread(sorted, g.begin, g.end - 1);
    g.delta_prime = g.delta;
    g.kind = g.delta.times_at_most_one(tau) ? GroupKind::Good : GroupKind::Bad;
  }
  return plan;
}

NearBreak bad_groups_near(const GroupPlan& plan, PointSpan sorted, const Ratio& rho_b) {
  NearBreak out;
  for (const auto& g : plan.groups) {
    if (g.kind != GroupKind::Bad) continue;
    bool near = false;
    for (std::size_t i = g.begin; i < g.end && !near; ++i) {
      Ratio e = efficiency(sorted[i]);
      Gap d = e < rho_b ? gap(rho_b, e) : gap(e, rho_b);
      near = d.times_at_most_one(plan.tau);
    }
    if (near) {
      ++out.bad_groups;
      out.within_tau = out.within_tau && (i64)g.size() <= plan.tau;
    }
  }
  return out;
}

GroupPlan partition_head(PointSpan s, i64 tau) {
  if (tau < 1) throw std::invalid_argument("partition_head: tau must be >= 1");
  check_coords(s);
  const std::size_t n = s.size();
  GroupPlan plan;
  plan.tau = tau;
  std::size_t k = 0;
  while (k < n) {
    // smallest k2 with (k2 - k + 1) * (e_k - e_k2) > 1
    std::size_t k2 = k + 1;
    while (k2 < n && !spread(s, k, k2).times_exceeds_one((i64)(k2 - k + 1))) ++k2;
    if (k2 == n) {
      plan.groups.push_back({k, n, GroupKind::Last, spread(s, k, n - 1), spread(s, k, n - 1)});
      break;
    }
    if ((i64)(k2 - k) >= tau) {
      plan.groups.push_back({k, k2, GroupKind::Good, spread(s, k, k2 - 1), spread(s, k, k2)});
      k = k2;
    } else {
      std::size_t e = std::min(n, k + (std::size_t)tau);
      Gap d = spread(s, k, e - 1);
      plan.groups.push_back({k, e, GroupKind::Bad, d, e < n ? spread(s, k, e) : d});
      k = e;
    }
  }
  return plan;
}

std::vector<std::string> check_head_observation(const GroupPlan& plan, PointSpan s, bool unit_box) {
  std::vector<std::string> bad;
  const auto& g = plan.groups;
  const i64 n = (i64)s.size(), m = (i64)g.size(), tau = plan.tau;
  if (n == 0) {
    if (m != 0) bad.push_back("(ii) groups on an empty head");
    return bad;
  }
  if ((m - 1) * tau > n - 1) bad.push_back("(i) too many groups");
  std::size_t at = 0;
  for (const auto& x : g) {
    if (x.begin != at || x.empty()) bad.push_back("(ii) groups do not tile the head");
    at = x.end;
  }
  if (at != (std::size_t)n) bad.push_back("(ii) sizes do not add up");
  if (!bad.empty()) return bad;
  for (i64 j = 0; j < m; ++j) {
    const Group& x = g[j];
    const i64 sz = (i64)x.size();
    if (x.delta_prime < x.delta) bad.push_back("(ii) delta above delta'");
    Gap expect = j + 1 < m ? spread(s, x.begin, g[j + 1].begin) : x.delta;
    if (!(x.delta_prime == expect)) bad.push_back("(ii) delta' does not telescope");
    if (!(x.delta == spread(s, x.begin, x.end - 1))) bad.push_back("(iii) spread mismatch");
    for (std::size_t i = x.begin + 1; i < x.end; ++i)
      if (efficiency(s[i - 1]) < efficiency(s[i])) bad.push_back("(iii) not sorted");
    switch (x.kind) {
      case GroupKind::Good:
        if (!x.delta.times_at_most_one(sz)) bad.push_back("(iv) good |I| delta > 1");
        if (x.delta_prime.num * 2 * sz < x.delta_prime.den)
          bad.push_back("(iv) good |I| delta' < 1/2");
        if (j + 1 == m) bad.push_back("(iv) good group at the end");
        break;
      case GroupKind::Bad:
        if (!x.delta.times_exceeds_one(sz)) bad.push_back("(v) bad |I| delta <= 1");
        if (sz != tau && j + 1 != m) bad.push_back("(v) bad group size");
        break;
      case GroupKind::Last:
        if (!x.delta.times_at_most_one(sz)) bad.push_back("(vi) last |I| delta > 1");
        if (j + 1 != m) bad.push_back("(vi) last group not at the end");
        break;
      default:
        bad.push_back("unexpected group kind");
    }
  }
  if (unit_box) {
    Gap total = spread(s, 0, n - 1);
    if (total.num * 2 > total.den * 3) bad.push_back("(ii) telescoped spread above 3/2");
  }
  return bad;
}

std::vector<std::size_t> cluster_indices(const std::vector<long double>& d) {
  if (d.empty()) throw std::invalid_argument("cluster_indices: empty sequence");
  for (auto x : d)
    if (!(x > 0)) throw std::invalid_argument("cluster_indices: entries must be positive");
  const std::size_t n = d.size();
  std::vector<long double> suf(n + 1, 0);  // suf[i] = sum of d[i..n-1], 0-based
  for (std::size_t i = n; i-- > 0;) suf[i] = suf[i + 1] + d[i];
  // advance each index while the absorbed maximum stays within the suffix
  std::vector<std::size_t> out{1};
  std::size_t cur = 1;
  while (cur < n) {
    std::size_t nxt = cur + 1;
    long double mx = 0;
    while (nxt < n) {
      long double cand = std::max(mx, d[nxt - 1]);
      if (cand > suf[nxt]) break;
      mx = cand;
      ++nxt;
    }
    out.push_back(nxt);
    cur = nxt;
  }
  return out;
}

bool cluster_inequality_holds(const std::vector<long double>& d, const std::vector<std::size_t>& idx) {
  const std::size_t n = d.size();
  if (idx.empty() || idx.front() != 1 || idx.back() != n) return false;
  std::vector<long double> suf(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suf[i] = suf[i + 1] + d[i];
  for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
    if (idx[k + 1] <= idx[k]) return false;
    long double mx = 0;
    for (std::size_t j = idx[k] + 1; j < idx[k + 1]; ++j) mx = std::max(mx, d[j - 1]);
    if (mx > suf[idx[k + 1] - 1]) return false;
  }
  return true;
}

GroupPlan partition_tail(PointSpan s, double alpha, double eps) {
  check_coords(s);
  GroupPlan plan;
  const long double ae = (long double)alpha * eps;
  std::size_t i = 0;
  int j = 0;
  Group cur{0, 0, GroupKind::Tail, {}, {}};
  while (i < s.size()) {
    const long double budget = std::ldexp(ae, j - 1);
    bool fits = cur.empty() || spread(s, cur.begin, i).value() <= budget;
    if (fits) {
      cur.end = ++i;
    } else {
      cur.delta = cur.delta_prime = spread(s, cur.begin, cur.end - 1);
      plan.groups.push_back(cur);
      ++j;
      cur = {i, i, GroupKind::Tail, {}, {}};
    }
  }
  if (!cur.empty()) {
    cur.delta = cur.delta_prime = spread(s, cur.begin, cur.end - 1);
    plan.groups.push_back(cur);
  }
  return plan;
}

}  // namespace wk
