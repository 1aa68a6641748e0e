#pragma once

// Inner loops behind the dissimilarity sums.
//
// Every sum runs over consecutive delta pairs: term j (0-based) uses the
// basic gestures (df[j], df[j+1]) and (dg[j], dg[j+1]), scaled by
// weights[j] when a weight vector is supplied (empty span = unit weights).
//
// The *_serial variants are the reference implementation: one left-to-right
// loop. The *_parallel variants split the terms into fixed blocks of
// kBlockTerms, sum each block left to right, then add the block partials in
// block order. The fixed topology makes results bit-identical whatever the
// OpenMP thread count.

#include <cstddef>
#include <span>

#include "ftl/geometry.hpp"

namespace ftl::kernels {

inline constexpr std::size_t kBlockTerms = 2048;

enum class LsdRoute {
  ComplexQuotient,  // |u1/u2 - v1/v2|
  DotProduct,       // closed form in dot products
  CrossMultiplied,  // |u1 v2 - v1 u2| / (|u2||v2|)
};

double ftl_sum_serial(std::span<const Vec2> df, std::span<const Vec2> dg,
                      std::span<const double> weights = {},
                      LsdRoute route = LsdRoute::ComplexQuotient);

/// Production path; uses the dot-product route.
double ftl_sum_parallel(std::span<const Vec2> df, std::span<const Vec2> dg,
                        std::span<const double> weights = {});

Complex shape_sum_serial(std::span<const Vec2> dg, std::span<const double> weights = {});
Complex shape_sum_parallel(std::span<const Vec2> dg, std::span<const double> weights = {});

/// Number of OpenMP threads the parallel kernels would use (1 when built
/// without OpenMP).
int max_threads();

}  // namespace ftl::kernels
