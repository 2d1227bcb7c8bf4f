#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wk/core.hpp"
#include "wk/ratio.hpp"

namespace wk {

// Exact difference of two efficiencies, hi - lo. Coordinates must stay below
// 2^31 so that every comparison below fits in i128.
struct Gap {
  i128 num = 0;
  i128 den = 1;
  long double value() const { return (long double)num / (long double)den; }
  friend std::strong_ordering operator<=>(const Gap& a, const Gap& b) {
    i128 l = a.num * b.den, r = b.num * a.den;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend bool operator==(const Gap& a, const Gap& b) { return (a <=> b) == 0; }
  // c * gap compared with 1
  bool times_exceeds_one(i64 c) const { return num * c > den; }
  bool times_at_most_one(i64 c) const { return num * c <= den; }
};

Gap gap(const Ratio& hi, const Ratio& lo);

struct SortedItems {
  PointSet items;                  // descending efficiency
  std::vector<std::size_t> index;  // items[i] = input[index[i]]
};

// Stable: equal efficiencies keep input order.
SortedItems sort_by_efficiency(PointSpan items);

struct Breaking {
  std::size_t b = 1;          // 1-based, n+1 when no prefix exceeds w*
  std::optional<Point> item;  // nullopt stands for (+inf, 0)
};

Breaking breaking_item(PointSpan sorted, i64 w_star);

enum class Side { Below, Above };

// For I' = all items whose efficiency is >= gap below (Below) or above
// (Above) the breaking efficiency for w(I*), checks w(I' ∩ I*) resp.
// w(I' \ I*) <= 2*unit/gap. Items are on a grid where the box [1,2]^2 is
// [unit, 2*unit]^2. `witness` lists indices of I* into `sorted`.
bool proximity_check(PointSpan sorted, const std::optional<std::vector<std::size_t>>& witness,
                     Side side, const Ratio& gap, i64 unit);

enum class GroupKind { Good, Bad, Head, Tail, Last };

const char* to_string(GroupKind k);

struct Group {
  std::size_t begin = 0, end = 0;  // [begin, end) over the sorted order
  GroupKind kind = GroupKind::Good;
  Gap delta;
  Gap delta_prime;
  std::size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
};

struct GroupPlan {
  std::vector<Group> groups;
  i64 tau = 1;
};

// m = ceil(1/(alpha eps tau)) + 3 groups; trailing groups may be empty.
GroupPlan partition_116(PointSpan sorted, double alpha, double eps, i64 tau);
std::size_t partition_116_groups(double alpha, double eps, i64 tau);

// Bad groups of the plan holding an item with efficiency within 1/tau of
// rho_b, and whether each such group has at most tau items (groups cut short
// by running out of items are smaller).
struct NearBreak {
  std::size_t bad_groups = 0;
  bool within_tau = true;
};
NearBreak bad_groups_near(const GroupPlan& plan, PointSpan sorted, const Ratio& rho_b);

GroupPlan partition_head(PointSpan sorted_head, i64 tau);

// Failed clauses of the head-plan observation, empty when all hold. With
// `unit_box` the items are taken to lie in [u,2u]^2 so the telescoped spread
// must be at most 3/2.
std::vector<std::string> check_head_observation(const GroupPlan& plan, PointSpan sorted_head,
                                                bool unit_box = true);

// Indices 1 = j_1 < ... < j_h = n (1-based).
std::vector<std::size_t> cluster_indices(const std::vector<long double>& deltas);
bool cluster_inequality_holds(const std::vector<long double>& deltas,
                              const std::vector<std::size_t>& idx);

// Greedy maximal groups I_0, I_1, ... with spread <= 2^(j-1) alpha eps.
GroupPlan partition_tail(PointSpan sorted_tail, double alpha, double eps);

}  // namespace wk
