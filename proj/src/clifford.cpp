#include "ftl/clifford.hpp"

#include <algorithm>
#include <cmath>

#include "ftl/error.hpp"

namespace ftl {

bool Multivector::is_finite() const {
  return std::isfinite(s) && std::isfinite(x) && std::isfinite(y) && std::isfinite(i);
}

double mv_norm(const Multivector& a) {
  return std::sqrt(mv_dot(a, a));
}

Multivector wedge(const Multivector& u, const Multivector& v) {
  if (!u.is_vector() || !v.is_vector()) {
    throw Error(ErrorCode::InvalidArgument, "wedge: operands must be pure vectors");
  }
  return Multivector::pseudoscalar(u.x * v.y - u.y * v.x);
}

Multivector vector_inverse(const Multivector& v, double epsilon, double scale) {
  if (!v.is_vector()) {
    throw Error(ErrorCode::InvalidArgument, "vector_inverse: operand must be a pure vector");
  }
  const double norm2 = v.x * v.x + v.y * v.y;
  if (!(std::sqrt(norm2) > epsilon * scale) || norm2 == 0.0) {
    throw Error(ErrorCode::ZeroVector, "vector_inverse: vector is zero");
  }
  return (1.0 / norm2) * v;
}

Multivector vector_quotient(const Multivector& u, const Multivector& v, double epsilon) {
  if (!u.is_vector() || !v.is_vector()) {
    throw Error(ErrorCode::InvalidArgument, "vector_quotient: operands must be pure vectors");
  }
  const double scale = std::max(std::hypot(u.x, u.y), std::hypot(v.x, v.y));
  return geometric_product(u, vector_inverse(v, epsilon, scale));
}

}  // namespace ftl
