#pragma once

// Arithmetic in the Clifford algebra Cl(2,0) of the Euclidean plane.
//
// A multivector is stored as (s, x, y, i): the scalar part, the e1 and e2
// coefficients, and the coefficient of the pseudoscalar I = e1 e2.

namespace ftl {

inline constexpr double kDefaultEpsilon = 1e-12;

struct Multivector {
  double s = 0.0;
  double x = 0.0;
  double y = 0.0;
  double i = 0.0;

  static constexpr Multivector scalar(double a) { return {a, 0.0, 0.0, 0.0}; }
  static constexpr Multivector vector(double x, double y) { return {0.0, x, y, 0.0}; }
  static constexpr Multivector pseudoscalar(double b) { return {0.0, 0.0, 0.0, b}; }
  static constexpr Multivector e1() { return vector(1.0, 0.0); }
  static constexpr Multivector e2() { return vector(0.0, 1.0); }
  static constexpr Multivector I() { return pseudoscalar(1.0); }

  constexpr bool is_vector() const { return s == 0.0 && i == 0.0; }
  constexpr bool is_even() const { return x == 0.0 && y == 0.0; }
  bool is_finite() const;

  friend constexpr bool operator==(const Multivector&, const Multivector&) = default;
};

constexpr Multivector operator+(const Multivector& a, const Multivector& b) {
  return {a.s + b.s, a.x + b.x, a.y + b.y, a.i + b.i};
}
constexpr Multivector operator-(const Multivector& a, const Multivector& b) {
  return {a.s - b.s, a.x - b.x, a.y - b.y, a.i - b.i};
}
constexpr Multivector operator-(const Multivector& a) { return {-a.s, -a.x, -a.y, -a.i}; }
constexpr Multivector operator*(double k, const Multivector& a) {
  return {k * a.s, k * a.x, k * a.y, k * a.i};
}

/// Full associative product. Multiplication table on the basis:
///   e1e1 = e2e2 = 1, e1e2 = -e2e1 = I, e1I = e2, Ie1 = -e2, e2I = -e1,
///   Ie2 = e1, II = -1.
constexpr Multivector geometric_product(const Multivector& a, const Multivector& b) {
  return {
      a.s * b.s + a.x * b.x + a.y * b.y - a.i * b.i,
      a.s * b.x + a.x * b.s - a.y * b.i + a.i * b.y,
      a.s * b.y + a.x * b.i + a.y * b.s - a.i * b.x,
      a.s * b.i + a.x * b.y - a.y * b.x + a.i * b.s,
  };
}

constexpr Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

/// Positive definite bilinear form U.V = u0 v0 + u.v + u3 v3.
constexpr double mv_dot(const Multivector& a, const Multivector& b) {
  return a.s * b.s + a.x * b.x + a.y * b.y + a.i * b.i;
}

double mv_norm(const Multivector& a);

/// Outer product of two pure vectors; the pseudoscalar coefficient is
/// det[[u.x, u.y], [v.x, v.y]]. Throws InvalidArgument on non-vector input.
Multivector wedge(const Multivector& u, const Multivector& v);

/// v / |v|^2. Throws ZeroVector when |v| <= epsilon * scale.
Multivector vector_inverse(const Multivector& v, double epsilon = kDefaultEpsilon,
                           double scale = 1.0);

/// u v^-1 = (u.v + u^v) / |v|^2, an even multivector. The zero test is
/// relative to max(|u|, |v|).
Multivector vector_quotient(const Multivector& u, const Multivector& v,
                            double epsilon = kDefaultEpsilon);

}  // namespace ftl
