#pragma once

#include <vector>

#include "wk/conv.hpp"
#include "wk/core.hpp"
#include "wk/rng.hpp"
#include "wk/rp.hpp"

namespace wk {

struct ColorCodeConfig {
  i64 k = 1;
  double q = 0.5;
  std::uint64_t seed = 0;
};

// Part index of each of n items, uniform and independent.
std::vector<std::size_t> random_assignment(std::size_t n, std::size_t parts, Rng& rng);
std::vector<PointSet> random_partition(PointSpan items, std::size_t parts, Rng& rng);

int color_coding_rounds(double q);
// Size bound handed to each second layer call: ceil(6 log2(k/q)).
i64 second_layer_k(i64 k, double q);

// Union over the rounds of merge_many({(0,0)} u bucket) over k^2 buckets.
PointSet color_coding(PointSpan items, i64 k, double q, double eps, Rng& rng);
PointSet color_coding(PointSpan items, const ColorCodeConfig& cfg, double eps);
PointSet two_layer_color_coding(PointSpan items, i64 k, double q, double eps, Rng& rng);

// Factor of one color_coding call on a point it catches, and of two_layer.
double color_coding_factor(double eps);
double two_layer_factor(double eps);

// q = (n + 1/eps)^(-exponent)
double failure_q(std::size_t n, double eps, int exponent);

// Snaps to the eps*unit grid (weights up, profits down), then two layer color
// coding with k = ceil(1/(alpha eps)).
PointSet solve_rp_large_alpha(const RpInstance& rp, double eps, Rng& rng, int exponent = 2);
double large_alpha_factor(double eps);

}  // namespace wk
