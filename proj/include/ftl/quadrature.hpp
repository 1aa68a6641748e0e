#pragma once

#include <cstddef>

#include "ftl/error.hpp"

namespace ftl {

/// Composite Simpson rule on `nodes` uniform nodes over [a, b]. An odd
/// interval count closes with the 3/8 rule on the last three intervals; two
/// nodes degrade to the trapezoid rule. Works for any F returning a type
/// closed under + and scalar *.
template <class F>
auto composite_simpson(const F& f, double a, double b, std::size_t nodes) {
  if (nodes < 2) {
    throw Error(ErrorCode::InvalidArgument, "composite_simpson needs at least 2 nodes");
  }
  const std::size_t intervals = nodes - 1;
  const double h = (b - a) / static_cast<double>(intervals);
  auto x = [&](std::size_t k) { return k == intervals ? b : a + static_cast<double>(k) * h; };

  if (intervals == 1) return (0.5 * h) * (f(a) + f(b));

  auto three_eighths = [&](std::size_t k) {
    return (3.0 * h / 8.0) * (f(x(k)) + 3.0 * f(x(k + 1)) + 3.0 * f(x(k + 2)) + f(x(k + 3)));
  };
  if (intervals == 3) return three_eighths(0);

  const std::size_t simpson = intervals % 2 == 0 ? intervals : intervals - 3;
  auto odd = f(x(1));
  for (std::size_t k = 3; k < simpson; k += 2) odd = odd + f(x(k));
  auto inner = f(x(0)) + f(x(simpson)) + 4.0 * odd;
  if (simpson > 2) {
    auto even = f(x(2));
    for (std::size_t k = 4; k < simpson; k += 2) even = even + f(x(k));
    inner = inner + 2.0 * even;
  }
  auto total = (h / 3.0) * inner;
  if (simpson != intervals) total = total + three_eighths(simpson);
  return total;
}

}  // namespace ftl
