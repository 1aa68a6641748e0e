#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ftl/gesture.hpp"

namespace ftl {

enum class Mode { Uniform, Weighted };

std::string_view to_string(Mode mode) noexcept;
std::optional<Mode> parse_mode(std::string_view text) noexcept;

struct DissimilarityReport {
  double value = 0.0;
  std::size_t terms = 0;
  Mode mode = Mode::Uniform;
};

/// Absolute tolerance on timestamps when deciding two samples are isochronous.
inline constexpr double kIsochronyTolerance = 1e-9;

/// Throws SampleMismatch unless f and g have the same point count and
/// timestamps agreeing within kIsochronyTolerance.
void check_isochronous(const SampledGesture& f, const SampledGesture& g);

/// Per-term weights (t_{k+1} - t_k) / (t_k - t_{k-1}), k = 1..n-1. A grid
/// within kIsochronyTolerance of t_k = k/n gets exact unit weights.
std::vector<double> step_weights(const SampledGesture& g);

/// Sum of local shape distances over consecutive basic gestures.
DissimilarityReport ftl(const SampledGesture& f, const SampledGesture& g);

/// ftl with each term scaled by its step weight.
DissimilarityReport wftl(const SampledGesture& f, const SampledGesture& g);

DissimilarityReport dissimilarity(const SampledGesture& f, const SampledGesture& g, Mode mode);

/// Sum over k = 1..n-1 of the (optionally step-weighted) complex shapes
/// dg_k / dg_{k+1}.
Complex shape_sum(const SampledGesture& g, bool weighted);

/// Sum over k = 1..n-1 of (t_{k+1} - t_{k-1}) - (1 - w_k dg_k / dg_{k+1}),
/// the form whose limit is 2 - integral of g''/g'. Used as a diagnostic next
/// to shape_sum(), whose terms tend to 1 each and so grow like n.
Complex centered_shape_sum(const SampledGesture& g);

/// g''(t) / g'(t) as a complex quotient.
Complex curvature_ratio(const AnalyticGesture& g, double t);

/// 1 - g''(t) / (2 g'(t)). Throws DomainError for t outside [0, 1].
Complex gesture_shape(const AnalyticGesture& g, double t);

inline constexpr std::size_t kDefaultQuadPoints = 4097;

/// Integral over [0, 1] of |f''/f' - g''/g'| by composite Simpson.
double shape_functional(const AnalyticGesture& f, const AnalyticGesture& g,
                        std::size_t quad_points = kDefaultQuadPoints);

/// Integral over [0, 1] of g''/g'.
Complex curvature_integral(const AnalyticGesture& g,
                           std::size_t quad_points = kDefaultQuadPoints);

}  // namespace ftl
