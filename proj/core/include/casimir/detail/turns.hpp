#pragma once

#include <cmath>
#include <numbers>

namespace casimir::detail {

/// Fractional part of x / period, in [0, 1). The reduction is exact for
/// x >= 0, so x and x + n * period give the same phase when both are exact.
inline double turns(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  const double f = r / period;
  return f < 1.0 ? f : 0.0;
}

namespace turns_impl {

// Splits t into a quadrant index and the angle within that quadrant.
inline int quadrant(double t, double& angle) {
  t -= std::floor(t);
  const double q = 4.0 * t;
  const double whole = std::floor(q);
  angle = (q - whole) * (std::numbers::pi / 2.0);
  return static_cast<int>(whole) & 3;
}

}  // namespace turns_impl

/// sin(2 pi t) with exact 0 / +-1 at quarter turns.
inline double sin_turns(double t) {
  double a;
  switch (turns_impl::quadrant(t, a)) {
    case 0: return std::sin(a);
    case 1: return std::cos(a);
    case 2: return -std::sin(a);
    default: return -std::cos(a);
  }
}

/// cos(2 pi t) with exact 0 / +-1 at quarter turns.
inline double cos_turns(double t) {
  double a;
  switch (turns_impl::quadrant(t, a)) {
    case 0: return std::cos(a);
    case 1: return -std::sin(a);
    case 2: return -std::cos(a);
    default: return std::sin(a);
  }
}

}  // namespace casimir::detail
