#include "ftl/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <random>

#include <json.hpp>

#include "ftl/error.hpp"

namespace ftl {

namespace {

double max_step(std::span<const double> t) {
  double d = 0.0;
  for (std::size_t k = 1; k < t.size(); ++k) d = std::max(d, t[k] - t[k - 1]);
  return d;
}

SweepRow make_row(std::size_t n, double delta, Complex value, Complex oracle) {
  SweepRow row{n, delta, value, oracle, std::abs(value - oracle), 0.0};
  const double scale = std::abs(oracle);
  row.rel_error = scale > 0.0 ? row.abs_error / scale : std::numeric_limits<double>::quiet_NaN();
  return row;
}

void check_ns(const std::vector<std::size_t>& ns) {
  if (!std::is_sorted(ns.begin(), ns.end())) {
    throw Error(ErrorCode::InvalidArgument, "sweep sizes must be ascending");
  }
  for (auto n : ns) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "sweep sizes must be >= 2");
  }
}

// Rows are independent; each lands in its own slot so output order is the
// input order regardless of scheduling.
template <class RowFn>
std::vector<SweepRow> run_sweep(const std::vector<std::size_t>& ns, const RowFn& row_for) {
  check_ns(ns);
  std::vector<SweepRow> rows(ns.size());
  std::vector<std::exception_ptr> errors(ns.size());
#pragma omp parallel for schedule(dynamic) if (ns.size() > 1)
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(ns.size()); ++j) {
    try {
      rows[static_cast<std::size_t>(j)] = row_for(ns[static_cast<std::size_t>(j)]);
    } catch (...) {
      errors[static_cast<std::size_t>(j)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::vector<double> sweep_times(std::size_t n, const SamplingMode& mode) {
  auto t = uniform_times(n);
  if (!mode.jitter) return t;
  if (!(mode.strength >= 0.0 && mode.strength < 0.5)) {
    throw Error(ErrorCode::InvalidArgument, "jitter strength must lie in [0, 0.5)");
  }
  std::seed_seq seq{static_cast<std::uint32_t>(mode.seed), static_cast<std::uint32_t>(mode.seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(std::uint64_t{n} >> 32)};
  std::mt19937_64 gen(seq);
  const double nd = static_cast<double>(n);
  for (std::size_t k = 1; k < n; ++k) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
    t[k] = (static_cast<double>(k) + mode.strength * u) / nd;
  }
  return t;
}

std::vector<SweepRow> sweep_ftl(const AnalyticGesture& f, const AnalyticGesture& g,
                                const std::vector<std::size_t>& ns, const SamplingMode& mode) {
  const Complex oracle{shape_functional(f, g), 0.0};
  return run_sweep(ns, [&](std::size_t n) {
    const auto t = sweep_times(n, mode);
    const auto fs = sample_at(f, t);
    const auto gs = sample_at(g, t);
    const auto report = mode.jitter ? wftl(fs, gs) : ftl(fs, gs);
    return make_row(n, max_step(t), {report.value, 0.0}, oracle);
  });
}

std::vector<SweepRow> sweep_shape_sum(const AnalyticGesture& g,
                                      const std::vector<std::size_t>& ns,
                                      const SamplingMode& mode) {
  const Complex oracle = 2.0 - curvature_integral(g);
  return run_sweep(ns, [&](std::size_t n) {
    const auto t = sweep_times(n, mode);
    const auto gs = sample_at(g, t);
    return make_row(n, max_step(t), shape_sum(gs, mode.jitter), oracle);
  });
}

std::vector<SweepRow> sweep_centered_shape_sum(const AnalyticGesture& g,
                                               const std::vector<std::size_t>& ns,
                                               const SamplingMode& mode) {
  const Complex oracle = 2.0 - curvature_integral(g);
  return run_sweep(ns, [&](std::size_t n) {
    const auto t = sweep_times(n, mode);
    const auto gs = sample_at(g, t);
    return make_row(n, max_step(t), centered_shape_sum(gs), oracle);
  });
}

std::vector<DividedDifferenceRow> divided_difference_check(const AnalyticGesture& g, double t,
                                                           const std::vector<Window>& windows) {
  const Complex target = 0.5 * curvature_ratio(g, t);
  const Complex half_d2 = 0.5 * complex_of_vec(g.d2(t));
  std::vector<DividedDifferenceRow> rows;
  rows.reserve(windows.size());
  for (const auto& w : windows) {
    if (!(w.before > 0.0) || !(w.after > 0.0) || t - w.before < 0.0 || t + w.after > 1.0) {
      throw Error(ErrorCode::WindowOutOfDomain, "divided-difference window leaves [0, 1]");
    }
    const double tau0 = t - w.before, tau1 = t, tau2 = t + w.after;
    const Complex g0 = complex_of_vec(g.eval(tau0));
    const Complex g1 = complex_of_vec(g.eval(tau1));
    const Complex g2 = complex_of_vec(g.eval(tau2));
    const double weight = (tau2 - tau1) / (tau1 - tau0);
    const Complex value =
        (1.0 - weight * complex_quotient(g1 - g0, g2 - g1)) / (tau2 - tau0);
    const Complex second = ((g2 - g1) / (tau2 - tau1) - (g1 - g0) / (tau1 - tau0)) / (tau2 - tau0);
    rows.push_back({w, value, target, std::abs(value - target), second,
                    std::abs(second - half_d2)});
  }
  return rows;
}

std::vector<Window> halving_windows(double first, double last) {
  std::vector<Window> out;
  for (double h = first; h >= last; h *= 0.5) out.push_back({h, h});
  return out;
}

std::string emit_report(const std::vector<SweepRow>& rows, ReportFormat format) {
  if (format == ReportFormat::Json) {
    using Json = nlohmann::ordered_json;
    auto arr = Json::array();
    for (const auto& r : rows) {
      Json j;
      j["n"] = r.n;
      j["delta"] = r.delta;
      j["value_re"] = r.value.real();
      j["value_im"] = r.value.imag();
      j["oracle_re"] = r.oracle.real();
      j["oracle_im"] = r.oracle.imag();
      j["abs_error"] = r.abs_error;
      j["rel_error"] = std::isnan(r.rel_error) ? Json(nullptr) : Json(r.rel_error);
      arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
  }
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + format_double(r.delta) + "," +
           format_double(r.value.real()) + "," + format_double(r.value.imag()) + "," +
           format_double(r.oracle.real()) + "," + format_double(r.oracle.imag()) + "," +
           format_double(r.abs_error) + "," + format_double(r.rel_error) + "\n";
  }
  return out;
}

double loglog_slope(const std::vector<SweepRow>& rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const auto& r : rows) {
    if (!(r.abs_error > 0.0)) continue;
    const double x = std::log(static_cast<double>(r.n)), y = std::log(r.abs_error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) return std::numeric_limits<double>::quiet_NaN();
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace ftl
