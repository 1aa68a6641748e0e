#include "ftl/dissimilarity.hpp"

#include <cmath>
#include <string>

#include "ftl/error.hpp"
#include "ftl/kernels.hpp"
#include "ftl/quadrature.hpp"

namespace ftl {

std::string_view to_string(Mode mode) noexcept {
  return mode == Mode::Uniform ? "uniform" : "weighted";
}

std::optional<Mode> parse_mode(std::string_view text) noexcept {
  if (text == "uniform") return Mode::Uniform;
  if (text == "weighted") return Mode::Weighted;
  return std::nullopt;
}

void check_isochronous(const SampledGesture& f, const SampledGesture& g) {
  if (f.size() != g.size()) {
    throw Error(ErrorCode::SampleMismatch, "samples have " + std::to_string(f.size()) +
                                               " and " + std::to_string(g.size()) + " points");
  }
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (std::abs(f[k].t - g[k].t) > kIsochronyTolerance) {
      throw Error(ErrorCode::SampleMismatch,
                  "samples are not isochronous at point " + std::to_string(k), k);
    }
  }
}

std::vector<double> step_weights(const SampledGesture& g) {
  const std::size_t n = g.intervals();
  std::vector<double> w(n - 1, 1.0);
  bool uniform = true;
  for (std::size_t k = 0; k <= n && uniform; ++k) {
    const double grid = static_cast<double>(k) / static_cast<double>(n);
    uniform = std::abs(g[k].t - grid) <= kIsochronyTolerance;
  }
  if (uniform) return w;
  for (std::size_t k = 1; k < n; ++k) {
    w[k - 1] = (g[k + 1].t - g[k].t) / (g[k].t - g[k - 1].t);
  }
  return w;
}

DissimilarityReport ftl(const SampledGesture& f, const SampledGesture& g) {
  check_isochronous(f, g);
  const auto df = f.deltas();
  const auto dg = g.deltas();
  return {kernels::ftl_sum_parallel(df, dg), f.intervals() - 1, Mode::Uniform};
}

DissimilarityReport wftl(const SampledGesture& f, const SampledGesture& g) {
  check_isochronous(f, g);
  const auto df = f.deltas();
  const auto dg = g.deltas();
  const auto w = step_weights(f);
  return {kernels::ftl_sum_parallel(df, dg, w), f.intervals() - 1, Mode::Weighted};
}

DissimilarityReport dissimilarity(const SampledGesture& f, const SampledGesture& g, Mode mode) {
  return mode == Mode::Uniform ? ftl(f, g) : wftl(f, g);
}

Complex shape_sum(const SampledGesture& g, bool weighted) {
  const auto dg = g.deltas();
  if (!weighted) return kernels::shape_sum_parallel(dg);
  const auto w = step_weights(g);
  return kernels::shape_sum_parallel(dg, w);
}

Complex centered_shape_sum(const SampledGesture& g) {
  const auto dg = g.deltas();
  const auto w = step_weights(g);
  Complex sum{0.0, 0.0};
  for (std::size_t k = 1; k < g.intervals(); ++k) {
    const Complex shape =
        w[k - 1] * complex_quotient(complex_of_vec(dg[k - 1]), complex_of_vec(dg[k]));
    sum += (g[k + 1].t - g[k - 1].t) + (shape - 1.0);
  }
  return sum;
}

Complex curvature_ratio(const AnalyticGesture& g, double t) {
  return complex_quotient(complex_of_vec(g.d2(t)), complex_of_vec(g.d1(t)));
}

Complex gesture_shape(const AnalyticGesture& g, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(ErrorCode::DomainError, "gesture_shape: t must lie in [0, 1]");
  }
  return 1.0 - 0.5 * curvature_ratio(g, t);
}

double shape_functional(const AnalyticGesture& f, const AnalyticGesture& g,
                        std::size_t quad_points) {
  auto integrand = [&](double t) {
    return std::abs(curvature_ratio(f, t) - curvature_ratio(g, t));
  };
  return composite_simpson(integrand, 0.0, 1.0, quad_points);
}

Complex curvature_integral(const AnalyticGesture& g, std::size_t quad_points) {
  return composite_simpson([&](double t) { return curvature_ratio(g, t); }, 0.0, 1.0,
                           quad_points);
}

}  // namespace ftl
