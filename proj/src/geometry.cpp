#include "ftl/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "ftl/error.hpp"

namespace ftl {

namespace {

// Double-double arithmetic (error-free transformations). lsd_dot's
// numerator cancels when the two shapes are close; carrying ~106 bits
// through the dot products keeps the result accurate to a few ulps.
// The parenthesized low-order sums keep + and * commutative bit for bit,
// which makes lsd_dot exactly symmetric.
struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

DD quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

DD operator+(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  return quick_two_sum(s.hi, s.lo + (a.lo + b.lo));
}

DD operator-(DD a) { return {-a.hi, -a.lo}; }
DD operator-(DD a, DD b) { return a + -b; }

DD operator*(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  return quick_two_sum(p.hi, p.lo + (a.hi * b.lo + a.lo * b.hi));
}

DD dot2(Vec2 a, Vec2 b) { return two_prod(a.x, b.x) + two_prod(a.y, b.y); }

}  // namespace

void check_basic_gesture(const BasicGesture& bg, double epsilon) {
  if (!is_finite(bg.v1) || !is_finite(bg.v2)) {
    throw Error(ErrorCode::NonFinite, "basic gesture has non-finite components");
  }
  const double n1 = norm(bg.v1);
  const double n2 = norm(bg.v2);
  const double threshold = epsilon * std::max(n1, n2);
  if (!(n1 > threshold) || !(n2 > threshold)) {
    throw Error(ErrorCode::DegenerateBasicGesture, "basic gesture has a zero vector");
  }
}

Complex complex_quotient(Complex u, Complex v) {
  const double r = u.real(), s = u.imag();
  const double x = v.real(), y = v.imag();
  const double d = x * x + y * y;
  return {(r * x + s * y) / d, -(r * y - s * x) / d};
}

Complex complex_shape(const BasicGesture& bg) {
  check_basic_gesture(bg);
  return complex_quotient(complex_of_vec(bg.v1), complex_of_vec(bg.v2));
}

Multivector clifford_shape(const BasicGesture& bg) {
  check_basic_gesture(bg);
  return vector_quotient(multivector_of_vec(bg.v1), multivector_of_vec(bg.v2));
}

double lsd(const BasicGesture& a, const BasicGesture& b) {
  return std::abs(complex_shape(a) - complex_shape(b));
}

double lsd_dot_unchecked(Vec2 u1, Vec2 u2, Vec2 v1, Vec2 v2) {
  // The leftover double-double rounding is ~1e-32 relative, not zero.
  if (u1 == v1 && u2 == v2) return 0.0;
  const DD mixed = dot2(u1, u2) * dot2(v1, v2) - dot2(u1, v2) * dot2(u2, v1) +
                   dot2(u1, v1) * dot2(u2, v2);
  const DD sum = dot2(u1, u1) * dot2(v2, v2) + dot2(u2, u2) * dot2(v1, v1) - (mixed + mixed);
  const double numerator = sum.hi + sum.lo;
  const double denominator = norm2(u2) * norm2(v2);
  // What rounding is left can still push an exact zero slightly negative.
  return std::sqrt(std::max(0.0, numerator) / denominator);
}

double lsd_dot(const BasicGesture& a, const BasicGesture& b) {
  check_basic_gesture(a);
  check_basic_gesture(b);
  return lsd_dot_unchecked(a.v1, a.v2, b.v1, b.v2);
}

Complex weighted_shape(const BasicGesture& bg, double dt_prev, double dt_next) {
  if (!(dt_prev > 0.0) || !(dt_next > 0.0)) {
    throw Error(ErrorCode::NonpositiveTimestep, "weighted_shape: timesteps must be positive");
  }
  return (dt_next / dt_prev) * complex_shape(bg);
}

}  // namespace ftl
