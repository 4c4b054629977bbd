#pragma once

#include <cmath>

namespace semloc {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

/// Wraps an angle to [-pi, pi).
inline double wrap_angle(double a) {
  a = std::fmod(a + M_PI, 2.0 * M_PI);
  if (a < 0.0) a += 2.0 * M_PI;
  return a - M_PI;
}

/// Planar pose (x, y in metres, theta in radians, wrapped to [-pi, pi)).
struct Pose2D {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  Vec2 position() const { return {x, y}; }
};

inline Vec2 rotate(double angle, Vec2 v) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

/// Pose composition a (+) b: b expressed in a's frame, returned in a's parent frame.
inline Pose2D compose(const Pose2D& a, const Pose2D& b) {
  const Vec2 p = a.position() + rotate(a.theta, b.position());
  return {p.x, p.y, wrap_angle(a.theta + b.theta)};
}

inline Pose2D inverse(const Pose2D& a) {
  const Vec2 p = rotate(-a.theta, {-a.x, -a.y});
  return {p.x, p.y, wrap_angle(-a.theta)};
}

}  // namespace semloc
