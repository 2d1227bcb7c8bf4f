#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "wk/core.hpp"

namespace wk {

// Grid resolution of the box [1,2]^2: a reduced item has both coordinates in
// [unit, 2*unit].
inline constexpr i64 kRpUnit = i64{1} << 20;

struct RpInstance {
  PointSet items;
  double alpha = 0.5;
  i64 unit = kRpUnit;
  // An RP point (w, p) maps back to original weight ceil(w*weight_scale/unit)
  // and profit floor(p*profit_scale/unit).
  i64 weight_scale = 1;
  i64 profit_scale = 1;
};

// alpha in [1/2, max(1/2, 1/(4 eps))]; for eps > 1/2 the nominal interval is
// empty and only alpha = 1/2 is accepted.
inline double rp_alpha_max(double eps) { return std::max(0.5, 1.0 / (4.0 * eps)); }

inline void validate_rp(const RpInstance& rp, double eps) {
  if (rp.unit < 1) throw std::invalid_argument("rp: unit must be positive");
  if (!(rp.alpha >= 0.5 && rp.alpha <= rp_alpha_max(eps) * (1 + 1e-12)))
    throw std::invalid_argument("rp: alpha outside [1/2, 1/(4 eps)]");
  for (const auto& it : rp.items)
    if (it.weight < rp.unit || it.weight > 2 * rp.unit || it.profit < rp.unit || it.profit > 2 * rp.unit)
      throw std::invalid_argument("rp: item outside the unit box");
}

// Weight window 1/(alpha eps) in grid units.
inline i64 rp_window(const RpInstance& rp, double eps) {
  return (i64)std::floor((long double)rp.unit / ((long double)rp.alpha * eps));
}

using RpSolver = std::function<PointSet(const RpInstance&, double eps, std::uint64_t seed)>;

}  // namespace wk
