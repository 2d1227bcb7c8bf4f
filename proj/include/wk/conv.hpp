#pragma once

#include <stdexcept>
#include <vector>

#include "wk/core.hpp"

namespace wk {

enum class Kernel { ExactQuadratic, Subquadratic };

// eps: accuracy of one pairwise merge. approx_conv_pair output approximates
// the exact (max,+) convolution with factor 1 + kPairFactor*eps for every
// eps in (0,1]. Only ExactQuadratic is implemented; Subquadratic is accepted
// by the interface and currently runs the same kernel.
struct ConvConfig {
  double eps = 0.1;
  Kernel kernel = Kernel::ExactQuadratic;
  int failure_prob_exponent = 2;
};

inline constexpr double kPairFactor = 4.0;
// Snap resolution relative to eps. Two operands each lose < eps/5 of the
// sub-range cap, so weight and profit stay inside 1 + 4 eps up to eps = 1.
inline constexpr double kPairGridShare = 0.2;
// Output size per sub-range pair is at most kPairSizeK / eps.
inline constexpr double kPairSizeK = 21.0;

// Weights in {0} u [A,B], profits in {0} u [C,D].
struct ConvRange {
  i64 A = 1, B = 1, C = 1, D = 1;
};

class ConvError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact a (+) b for monotone (dominance free, sorted) inputs with every
// coordinate in [0, bound].
ParetoSet bm_maxplus_kernel(PointSpan a, PointSpan b, i64 bound,
                            Kernel kernel = Kernel::ExactQuadratic);

ConvRange range_of(PointSpan a, PointSpan b);

PointSet approx_conv_pair(PointSpan a, PointSpan b, const ConvConfig& cfg,
                          const ConvRange& range);
PointSet approx_conv_pair(PointSpan a, PointSpan b, const ConvConfig& cfg);

// Number of power-of-two caps needed to cover [lo, 2*hi].
int subrange_count(i64 lo, i64 hi);
double pair_size_bound(double eps, const ConvRange& range);

PointSet merge_many(const std::vector<PointSet>& sets, const ConvConfig& cfg);

// Factor bound of merge_many: (1 + 4 eps/L)^L with L = ceil(log2 m).
double merge_many_factor(double eps, std::size_t m);
int ceil_log2(std::size_t m);

}  // namespace wk
