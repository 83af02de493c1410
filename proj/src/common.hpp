#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

namespace climbsim {

inline constexpr double kPi = std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double z = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.z + b.z}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.z - b.z}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.z}; }

inline double norm(Vec2 v) { return std::hypot(v.x, v.z); }

// Unit vector at angle `a` from +x toward +z.
inline Vec2 dir(double a) { return {std::cos(a), std::sin(a)}; }

// Rotate `v` by angle `a`.
inline Vec2 rotate(Vec2 v, double a) {
  const double c = std::cos(a), s = std::sin(a);
  return {c * v.x - s * v.z, s * v.x + c * v.z};
}

inline double clamp(double v, double lo, double hi) {
  return std::min(std::max(v, lo), hi);
}

// Wrap into [0, 2*pi).
inline double wrap_2pi(double a) {
  double m = std::fmod(a, 2.0 * kPi);
  if (m < 0.0) m += 2.0 * kPi;
  return m;
}

inline double deg_to_rad(double d) { return d * kPi / 180.0; }

}  // namespace climbsim
