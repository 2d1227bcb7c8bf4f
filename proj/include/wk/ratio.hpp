#pragma once

#include <cmath>
#include <compare>

#include "wk/core.hpp"

namespace wk {

// Exact nonnegative rational num/den, den > 0. Efficiencies p/w of grid
// points are compared through this so class boundaries never drift.
struct Ratio {
  i64 num = 0;
  i64 den = 1;

  long double value() const { return (long double)num / (long double)den; }

  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    i128 l = (i128)a.num * b.den, r = (i128)b.num * a.den;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend bool operator==(const Ratio& a, const Ratio& b) { return (a <=> b) == 0; }

  Ratio inverse() const { return {den, num}; }
};

inline Ratio efficiency(const Point& p) { return {p.profit, p.weight}; }

// Largest dyadic rational <= v with a numerator that keeps i128 products of
// grid sums safe.
inline Ratio ratio_floor(long double v) {
  i64 den = i64{1} << 40;
  while (den > 1 && v * (long double)den > 0x1.0p52L) den >>= 1;
  return {(i64)std::floor(v * (long double)den), den};
}

// floor(r * w)
inline i64 mul_floor(const Ratio& r, i64 w) { return (i64)(((i128)r.num * w) / r.den); }

}  // namespace wk
