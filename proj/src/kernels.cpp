#include "ftl/kernels.hpp"

#include <algorithm>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ftl/error.hpp"

namespace ftl::kernels {

namespace {

void check_lengths(std::size_t df, std::size_t dg, std::size_t weights) {
  if (df != dg) {
    throw Error(ErrorCode::SampleMismatch, "delta sequences differ in length");
  }
  if (weights != 0 && weights + 1 != df) {
    throw Error(ErrorCode::InvalidArgument, "weight count must be one less than delta count");
  }
}

double term_reference(LsdRoute route, Vec2 u1, Vec2 u2, Vec2 v1, Vec2 v2) {
  switch (route) {
    case LsdRoute::ComplexQuotient: return lsd({u1, u2}, {v1, v2});
    case LsdRoute::DotProduct: return lsd_dot({u1, u2}, {v1, v2});
    case LsdRoute::CrossMultiplied: return lsd_cross(u1, u2, v1, v2);
  }
  return 0.0;
}

std::size_t block_count(std::size_t terms) {
  return (terms + kBlockTerms - 1) / kBlockTerms;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

double ftl_sum_serial(std::span<const Vec2> df, std::span<const Vec2> dg,
                      std::span<const double> weights, LsdRoute route) {
  check_lengths(df.size(), dg.size(), weights.size());
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < df.size(); ++j) {
    const double w = weights.empty() ? 1.0 : weights[j];
    sum += w * term_reference(route, df[j], df[j + 1], dg[j], dg[j + 1]);
  }
  return sum;
}

double ftl_sum_parallel(std::span<const Vec2> df, std::span<const Vec2> dg,
                        std::span<const double> weights) {
  check_lengths(df.size(), dg.size(), weights.size());
  if (df.size() < 2) return 0.0;
  const std::size_t terms = df.size() - 1;
  const std::size_t blocks = block_count(terms);
  std::vector<double> partial(blocks, 0.0);
  const Vec2* f = df.data();
  const Vec2* g = dg.data();
  const double* w = weights.empty() ? nullptr : weights.data();

#pragma omp parallel for schedule(static) if (blocks > 1)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
    const std::size_t begin = static_cast<std::size_t>(b) * kBlockTerms;
    const std::size_t end = std::min(terms, begin + kBlockTerms);
    double acc = 0.0;
    for (std::size_t j = begin; j < end; ++j) {
      const double term = lsd_dot_unchecked(f[j], f[j + 1], g[j], g[j + 1]);
      acc += w ? w[j] * term : term;
    }
    partial[static_cast<std::size_t>(b)] = acc;
  }

  double sum = 0.0;
  for (double p : partial) sum += p;
  return sum;
}

Complex shape_sum_serial(std::span<const Vec2> dg, std::span<const double> weights) {
  check_lengths(dg.size(), dg.size(), weights.size());
  Complex sum{0.0, 0.0};
  for (std::size_t j = 0; j + 1 < dg.size(); ++j) {
    const Complex shape = complex_shape({dg[j], dg[j + 1]});
    sum += weights.empty() ? shape : weights[j] * shape;
  }
  return sum;
}

Complex shape_sum_parallel(std::span<const Vec2> dg, std::span<const double> weights) {
  check_lengths(dg.size(), dg.size(), weights.size());
  if (dg.size() < 2) return {0.0, 0.0};
  const std::size_t terms = dg.size() - 1;
  const std::size_t blocks = block_count(terms);
  std::vector<double> re(blocks, 0.0), im(blocks, 0.0);
  const Vec2* g = dg.data();
  const double* w = weights.empty() ? nullptr : weights.data();

#pragma omp parallel for schedule(static) if (blocks > 1)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
    const std::size_t begin = static_cast<std::size_t>(b) * kBlockTerms;
    const std::size_t end = std::min(terms, begin + kBlockTerms);
    double acc_re = 0.0, acc_im = 0.0;
    for (std::size_t j = begin; j < end; ++j) {
      const Complex q = complex_quotient(complex_of_vec(g[j]), complex_of_vec(g[j + 1]));
      const double k = w ? w[j] : 1.0;
      acc_re += k * q.real();
      acc_im += k * q.imag();
    }
    re[static_cast<std::size_t>(b)] = acc_re;
    im[static_cast<std::size_t>(b)] = acc_im;
  }

  Complex sum{0.0, 0.0};
  for (std::size_t b = 0; b < blocks; ++b) sum += Complex{re[b], im[b]};
  return sum;
}

}  // namespace ftl::kernels
