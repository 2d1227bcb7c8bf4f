#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wk/core.hpp"

namespace wk {

struct OracleLimits {
  std::size_t max_items_bruteforce = 20;
  i64 max_grid_dp = 10'000'000;
};

class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// S+(I), optionally restricted to weight <= cap.
ParetoSet bruteforce_pareto(PointSpan items, std::optional<i64> cap = std::nullopt,
                            const OracleLimits& lim = {});

// S+ of subset sums using at most max_count items.
ParetoSet bruteforce_pareto_bounded(PointSpan items, std::size_t max_count,
                                    const OracleLimits& lim = {});

// Literal 2^n enumeration, unfiltered. Used to cross check the pruned
// enumeration and for witness lookups. n <= 24.
struct SubsetSum {
  std::uint32_t mask = 0;
  Point sum;
};
std::vector<SubsetSum> enumerate_subsets(PointSpan items);

// Pareto points together with every subset realizing them.
struct Witnessed {
  Point point;
  std::vector<std::uint32_t> masks;
};
std::vector<Witnessed> pareto_witnesses(PointSpan items);

ParetoSet exact_pareto_dp(PointSpan items, i64 max_weight,
                          const OracleLimits& lim = {});

i64 greedy_half_opt(const Instance& inst);
i64 exact_opt(const Instance& inst, const OracleLimits& lim = {});

// Full front by whichever oracle fits the limits; throws OracleLimitError.
ParetoSet oracle_front(PointSpan items, const OracleLimits& lim = {});
bool dp_feasible(PointSpan items, i64 max_weight, const OracleLimits& lim = {});

}  // namespace wk
