#pragma once

#include <cmath>

namespace lg {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
  constexpr bool operator==(const Vec2&) const = default;
};

using Point = Vec2;

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
// Counter-clockwise quarter turn.
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 normalized(Vec2 a) { return a / norm(a); }

// Orthonormal direct frame. Coordinates throughout the library are expressed
// in the arc's frame, so the world transform is only needed for output.
struct Frame {
  Point origin{0.0, 0.0};
  Vec2 e1{1.0, 0.0};
  Vec2 e2{0.0, 1.0};

  Point to_world(Vec2 local) const { return origin + e1 * local.x + e2 * local.y; }
  Vec2 to_local(Point world) const {
    const Vec2 d = world - origin;
    return {dot(d, e1), dot(d, e2)};
  }
  bool is_orthonormal_direct(double tol = 1e-12) const {
    return std::abs(norm(e1) - 1.0) <= tol && std::abs(norm(e2) - 1.0) <= tol &&
           std::abs(dot(e1, e2)) <= tol && std::abs(cross(e1, e2) - 1.0) <= tol;
  }
};

}  // namespace lg
