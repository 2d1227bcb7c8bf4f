#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

#include "wk/core.hpp"
#include "wk/ratio.hpp"

namespace wk {

// Efficiencies in [lo, hi]; rho = lo, delta = hi - lo.
struct EffBand {
  Ratio lo;
  Ratio hi;
  long double rho() const { return lo.value(); }
  long double delta() const { return hi.value() - lo.value(); }
  bool contains(const Point& p) const;
  EffBand mirrored() const { return {hi.inverse(), lo.inverse()}; }
};

class BandError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Tightest band of the nonzero points. Points of weight 0 must be (0,0).
EffBand band_of(PointSpan pts);

// band_merge grid relative to eps; keeps one merge inside 1 + 4 eps.
inline constexpr double kBandGridShare = 1.0 / 12.0;
inline constexpr double kBandFactor = 4.0;

// Optional weight cap of the routines below: points heavier than the cap are
// dropped and the work above it is skipped.
inline constexpr i64 kNoCap = std::numeric_limits<i64>::max();

// All items must have efficiency exactly rho.
PointSet subsetsum_weak(PointSpan items, const Ratio& rho, double eps);

// Items with efficiency >= rho; every returned point is (s, floor(rho*s))
// for an exact subset weight s. Approximates the rho-line front of the items
// with factor 1+eps.
PointSet lower_efficiency_sums(PointSpan items, const Ratio& rho, double eps, i64 cap = kNoCap);

PointSet band_merge(PointSpan a, PointSpan b, const EffBand& band, double eps, i64 cap = kNoCap);

PointSet similar_eff_solve(PointSpan items, const EffBand& band, double eps, i64 cap = kNoCap);
PointSet approx_add(PointSpan items, const EffBand& band, double eps, i64 cap = kNoCap);
PointSet approx_del(PointSpan items, const EffBand& band, double eps);

// Number of (1+eps) efficiency classes similar_eff_solve uses (1 on the
// narrow-band path).
std::size_t efficiency_classes(PointSpan items, const EffBand& band, double eps);

// Proven factor of similar_eff_solve for a given class count:
// (1+eps) class rounding, (1+eps') subset sums, (1+4eps')^L merges with
// L = ceil(log2 m) and eps' = eps/max(1,L).
double similar_eff_factor(double eps, std::size_t classes);

namespace detail {

struct Cell {
  i64 i = 0, j = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Exact {x+y} over two cell sets, through a number theoretic transform.
std::vector<Cell> cell_sumset_ntt(const std::vector<Cell>& a, const std::vector<Cell>& b);
std::vector<Cell> cell_sumset_direct(const std::vector<Cell>& a, const std::vector<Cell>& b);

}  // namespace detail

}  // namespace wk
