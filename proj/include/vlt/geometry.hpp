#pragma once

#include <cmath>
#include <numbers>

namespace vlt {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double c, Vec2 v) { return {c * v.x, c * v.y}; }

  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
};

/// Unit direction (cos phi, sin phi).
inline Vec2 unit_vector(double phi) { return {std::cos(phi), std::sin(phi)}; }

/// Orthogonal complement (-sin phi, cos phi); together with unit_vector(phi)
/// it forms a positively oriented orthonormal basis.
inline Vec2 unit_normal(double phi) { return {-std::sin(phi), std::cos(phi)}; }

}  // namespace vlt
