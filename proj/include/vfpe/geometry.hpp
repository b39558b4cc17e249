#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vfpe {

/// 2D vector in meters (positions) or m/s (velocities).
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr bool operator==(const Vec2&) const = default;

  constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
  constexpr double norm_sq() const { return x * x + y * y; }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }

  /// Unit vector; zero-length input yields the zero vector.
  Vec2 unit() const {
    double n = norm();
    return n > 0.0 ? Vec2{x / n, y / n} : Vec2{};
  }
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }
inline double distance_sq(Vec2 a, Vec2 b) { return (a - b).norm_sq(); }

/// Axis-aligned rectangle with the origin at its southwest corner.
struct Rect {
  double width = 0.0;
  double height = 0.0;

  bool contains(Vec2 p) const {
    return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
  }
  Vec2 clamp(Vec2 p) const {
    return {std::min(std::max(p.x, 0.0), width),
            std::min(std::max(p.y, 0.0), height)};
  }
  constexpr Vec2 center() const { return {width / 2.0, height / 2.0}; }
};

struct DegenerateLineError : std::runtime_error {
  DegenerateLineError() : std::runtime_error("line endpoints coincide") {}
};

/// Orthogonal projection of p onto the infinite line through s and d.
/// Throws DegenerateLineError when s == d.
inline Vec2 project_onto_segment_line(Vec2 p, Vec2 s, Vec2 d) {
  Vec2 axis = d - s;
  double len_sq = axis.norm_sq();
  if (len_sq <= 0.0) throw DegenerateLineError{};
  double t = (p - s).dot(axis) / len_sq;
  return s + axis * t;
}

}  // namespace vfpe
