#pragma once

#include <cmath>
#include <complex>

#include "ftl/clifford.hpp"

namespace ftl {

using Complex = std::complex<double>;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Vec2 operator*(double k, Vec2 a) { return {k * a.x, k * a.y}; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
constexpr double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline bool is_finite(Vec2 a) { return std::isfinite(a.x) && std::isfinite(a.y); }

/// (x, y) <-> x + iy
inline Complex complex_of_vec(Vec2 v) { return {v.x, v.y}; }
inline Vec2 vec_of_complex(Complex c) { return {c.real(), c.imag()}; }

inline Multivector multivector_of_vec(Vec2 v) { return Multivector::vector(v.x, v.y); }

/// Ordered pair of non-zero plane vectors: two consecutive displacement arrows.
struct BasicGesture {
  Vec2 v1;
  Vec2 v2;
};

/// Throws DegenerateBasicGesture unless both vectors exceed
/// epsilon * max(|v1|, |v2|).
void check_basic_gesture(const BasicGesture& bg, double epsilon = kDefaultEpsilon);

/// u / v with the explicit division formula
///   (rx + sy)/|v|^2 - i (ry - sx)/|v|^2   for u = r + is, v = x + iy.
Complex complex_quotient(Complex u, Complex v);

Complex complex_shape(const BasicGesture& bg);
Multivector clifford_shape(const BasicGesture& bg);

/// Local shape distance |u1/u2 - v1/v2| through complex quotients.
double lsd(const BasicGesture& a, const BasicGesture& b);

/// Local shape distance from dot products only; one division and one square
/// root at the end. The numerator is accumulated in double-double so that
/// nearly equal shapes do not lose digits to cancellation.
double lsd_dot(const BasicGesture& a, const BasicGesture& b);

/// lsd_dot() on (u1, u2) vs (v1, v2) without validation, for inner loops
/// whose caller guarantees non-degenerate input.
double lsd_dot_unchecked(Vec2 u1, Vec2 u2, Vec2 v1, Vec2 v2);

/// Local shape distance as |u1 v2 - v1 u2| / (|u2| |v2|) with complex
/// products. Same value as lsd().
/// No validation: callers guarantee non-degenerate input.
inline double lsd_cross(Vec2 u1, Vec2 u2, Vec2 v1, Vec2 v2) {
  const double re = (u1.x * v2.x - u1.y * v2.y) - (v1.x * u2.x - v1.y * u2.y);
  const double im = (u1.x * v2.y + u1.y * v2.x) - (v1.x * u2.y + v1.y * u2.x);
  return std::hypot(re, im) / (std::hypot(u2.x, u2.y) * std::hypot(v2.x, v2.y));
}

/// (dt_next / dt_prev) * complex_shape(bg). Throws NonpositiveTimestep.
Complex weighted_shape(const BasicGesture& bg, double dt_prev, double dt_next);

}  // namespace ftl
