#pragma once

#include <cmath>
#include <numbers>

namespace vfg {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps an angle to (-pi, pi].
inline double wrap_pi(double angle) {
  double a = std::fmod(angle + kPi, kTwoPi);
  if (a <= 0.0) a += kTwoPi;
  return a - kPi;
}

/// Wraps an angle to [0, 2*pi).
inline double wrap_two_pi(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

/// Smallest signed difference a - b, wrapped to (-pi, pi].
inline double angle_diff(double a, double b) { return wrap_pi(a - b); }

}  // namespace vfg
