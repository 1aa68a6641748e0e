#pragma once

// Numerical checks of the limit statements behind ftl/wftl: sweeps over n
// against quadrature oracles, and the three-point divided-difference limit.

#include <cstdint>
#include <string>
#include <vector>

#include "ftl/dissimilarity.hpp"

namespace ftl {

/// Uniform grid t_k = k/n, or jittered t_k = (k + strength u_k)/n with u_k
/// uniform on (-1, 1) and endpoints pinned to 0 and 1.
struct SamplingMode {
  bool jitter = false;
  std::uint64_t seed = 0;
  double strength = 0.0;

  static SamplingMode uniform() { return {}; }
  static SamplingMode jittered(std::uint64_t seed, double strength) {
    return {true, seed, strength};
  }
};

/// Timestamps for n intervals under `mode`. Deterministic in (seed, n).
/// Throws InvalidArgument unless 0 <= strength < 0.5.
std::vector<double> sweep_times(std::size_t n, const SamplingMode& mode);

struct SweepRow {
  std::size_t n = 0;
  double delta = 0.0;  // largest timestep
  Complex value;
  Complex oracle;
  double abs_error = 0.0;
  double rel_error = 0.0;  // NaN when the oracle is zero
};

/// ftl (uniform mode) or wftl (jitter mode) of f, g against the integral
/// of |f''/f' - g''/g'|. `ns` must be ascending.
std::vector<SweepRow> sweep_ftl(const AnalyticGesture& f, const AnalyticGesture& g,
                                const std::vector<std::size_t>& ns, const SamplingMode& mode);

/// shape_sum (step-weighted in jitter mode) against 2 - integral of g''/g'.
std::vector<SweepRow> sweep_shape_sum(const AnalyticGesture& g,
                                      const std::vector<std::size_t>& ns,
                                      const SamplingMode& mode);

/// centered_shape_sum against the same oracle as sweep_shape_sum.
std::vector<SweepRow> sweep_centered_shape_sum(const AnalyticGesture& g,
                                               const std::vector<std::size_t>& ns,
                                               const SamplingMode& mode);

struct Window {
  double before = 0.0;  // h0: tau0 = t - h0
  double after = 0.0;   // h1: tau2 = t + h1
};

struct DividedDifferenceRow {
  Window window;
  /// (1 - (tau2-tau1)/(tau1-tau0) * (g(tau1)-g(tau0))/(g(tau2)-g(tau1))) / (tau2-tau0)
  Complex value;
  Complex target;  // g''(t) / (2 g'(t))
  double abs_error = 0.0;
  /// Plain second divided difference g[tau0, tau1, tau2] and its distance to g''(t)/2.
  Complex second_difference;
  double second_difference_error = 0.0;
};

/// Evaluates the three-point expression at tau0 = t - h0, tau1 = t,
/// tau2 = t + h1 for each window. Throws WindowOutOfDomain when a window
/// leaves [0, 1] or has a non-positive side.
std::vector<DividedDifferenceRow> divided_difference_check(const AnalyticGesture& g, double t,
                                                           const std::vector<Window>& windows);

/// Symmetric windows h, h/2, h/4, ... while the window stays >= last.
std::vector<Window> halving_windows(double first, double last);

enum class ReportFormat { Csv, Json };

inline constexpr const char* kCsvHeader =
    "n,delta,value_re,value_im,oracle_re,oracle_im,abs_error,rel_error";

/// Rows in input order; numbers printed with 17 significant digits.
std::string emit_report(const std::vector<SweepRow>& rows, ReportFormat format);

/// Least-squares slope of log(abs_error) against log(n); NaN with fewer than
/// two usable rows.
double loglog_slope(const std::vector<SweepRow>& rows);

}  // namespace ftl
