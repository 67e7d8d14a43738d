#ifndef TRICOLOR_VEC_HPP
#define TRICOLOR_VEC_HPP

#include <cmath>

#include "tricolor/rat.hpp"

namespace tricolor {

struct Vec2 {
  double x = 0.0, y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator-() const { return {-x, -y}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }

  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  double norm2() const { return x * x + y * y; }
  Vec2 rot90() const { return {-y, x}; }  // counterclockwise quarter turn
  Vec2 normalized() const {
    double n = norm();
    return n > 0 ? Vec2{x / n, y / n} : Vec2{0, 0};
  }
};

inline Vec2 from_angle(double a) { return {std::cos(a), std::sin(a)}; }

struct RatVec2 {
  Rat x, y;

  RatVec2() : x(0), y(0) {}
  RatVec2(Rat xx, Rat yy) : x(std::move(xx)), y(std::move(yy)) {}
  explicit RatVec2(Vec2 v) : x(rat_of(v.x)), y(rat_of(v.y)) {}

  RatVec2 operator+(const RatVec2& o) const { return {x + o.x, y + o.y}; }
  RatVec2 operator-(const RatVec2& o) const { return {x - o.x, y - o.y}; }
  Rat cross(const RatVec2& o) const { return x * o.y - y * o.x; }
  Rat dot(const RatVec2& o) const { return x * o.x + y * o.y; }

  Vec2 approx() const { return {to_double(x), to_double(y)}; }
};

// 2pi-periodic angle helpers; angles normalized into [0, 2pi).
inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.1415926535897932384626433832795;

inline double norm_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  return a;
}

// counterclockwise distance from a to b on the circle, in [0, 2pi)
inline double ccw_delta(double a, double b) {
  double d = norm_angle(b) - norm_angle(a);
  if (d < 0) d += kTwoPi;
  return d;
}

}  // namespace tricolor

#endif
