#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wk/algo.hpp"
#include "wk/gen.hpp"
#include "wk/oracle.hpp"
#include "wk/reduce.hpp"

namespace wk {

struct BenchSpec {
  std::vector<double> eps{0.5, 0.25, 0.1};
  std::vector<Strategy> strategies{Strategy::Auto};
  std::vector<Family> families{Family::Uniform};
  std::size_t n = 20;
  int reps = 1;
  std::uint64_t seed = 0;
  i64 lo = 1'000'000, hi = 100'000'000;
  OracleLimits limits;
  unsigned workers = 0;  // 0: hardware concurrency
};

struct BenchRow {
  Family family = Family::Uniform;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  double eps = 0;
  std::string alpha_distribution;  // "alpha x groups" entries joined by ';'
  Strategy strategy = Strategy::Auto;
  double wall_ms = 0;
  std::size_t set_size = 0;
  // min d with every S+(I;t) point covered at (+d eps t, -d eps OPT); empty
  // past the oracle limits
  std::optional<double> realized_additive_error;
};

std::string bench_csv_header();
std::string to_csv(const BenchRow& row);

// Weak-approximation error of a returned set against the exact front, in
// units of (eps t, eps OPT).
double realized_additive_error(PointSpan set, const ParetoSet& front, i64 capacity, double eps);
std::string alpha_distribution(const WeakAudit& audit);

// Runs every (family, rep, eps, strategy) cell on a worker pool and hands
// finished rows to `sink` one at a time. Stops handing out work once `stop`
// is set. Returns the number of rows produced.
std::size_t run_bench(const BenchSpec& spec, const std::function<void(const BenchRow&)>& sink,
                      const std::atomic<bool>* stop = nullptr);

}  // namespace wk
