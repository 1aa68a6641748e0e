#include "ftl/gesture.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ftl/error.hpp"

namespace ftl {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double bounding_diagonal(std::span<const TimedPoint> points) {
  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
  double min_y = min_x, max_y = -min_x;
  for (const auto& q : points) {
    min_x = std::min(min_x, q.p.x);
    max_x = std::max(max_x, q.p.x);
    min_y = std::min(min_y, q.p.y);
    max_y = std::max(max_y, q.p.y);
  }
  return std::hypot(max_x - min_x, max_y - min_y);
}

}  // namespace

std::vector<Vec2> SampledGesture::deltas() const {
  std::vector<Vec2> out;
  out.reserve(points_.size() - 1);
  for (std::size_t k = 1; k < points_.size(); ++k) {
    out.push_back(points_[k].p - points_[k - 1].p);
  }
  return out;
}

std::vector<double> SampledGesture::times() const {
  std::vector<double> out;
  out.reserve(points_.size());
  for (const auto& q : points_) out.push_back(q.t);
  return out;
}

SampledGesture validate_sample(std::vector<TimedPoint> points, double epsilon) {
  if (points.size() < 3) {
    throw Error(ErrorCode::TooFewPoints,
                "an n-sample needs at least 3 points, got " + std::to_string(points.size()));
  }
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (!std::isfinite(points[k].t) || !is_finite(points[k].p)) {
      throw Error(ErrorCode::NonFinite, "point " + std::to_string(k) + " is not finite", k);
    }
  }
  if (points.front().t != 0.0) {
    throw Error(ErrorCode::UnnormalizedTime, "first timestamp must be 0", 0);
  }
  if (points.back().t != 1.0) {
    throw Error(ErrorCode::UnnormalizedTime, "last timestamp must be 1", points.size() - 1);
  }
  for (std::size_t k = 1; k < points.size(); ++k) {
    if (!(points[k].t > points[k - 1].t)) {
      throw Error(ErrorCode::NonmonotoneTime,
                  "timestamp at point " + std::to_string(k) + " does not increase", k);
    }
  }
  const double threshold = epsilon * bounding_diagonal(points);
  for (std::size_t k = 1; k < points.size(); ++k) {
    const double d = norm(points[k].p - points[k - 1].p);
    if (!(d > threshold) || d == 0.0) {
      throw Error(ErrorCode::ZeroDelta,
                  "displacement into point " + std::to_string(k) + " is zero", k);
    }
  }
  return SampledGesture(std::move(points));
}

std::vector<double> uniform_times(std::size_t n) {
  std::vector<double> t(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    t[k] = static_cast<double>(k) / static_cast<double>(n);
  }
  t[n] = 1.0;
  return t;
}

SampledGesture sample_at(const AnalyticGesture& g, std::span<const double> times) {
  std::vector<TimedPoint> pts;
  pts.reserve(times.size());
  for (double t : times) pts.push_back({t, g.eval(t)});
  return validate_sample(std::move(pts));
}

SampledGesture uniform_sample(const AnalyticGesture& g, std::size_t n) {
  if (n < 2) {
    throw Error(ErrorCode::InvalidArgument, "uniform_sample requires n >= 2");
  }
  const auto t = uniform_times(n);
  return sample_at(g, t);
}

SampledGesture clean_stroke(std::span<const RawPoint> raw, double epsilon) {
  std::vector<RawPoint> pts(raw.begin(), raw.end());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (!std::isfinite(pts[k].ms) || !is_finite(pts[k].p)) {
      throw Error(ErrorCode::NonFinite, "raw point " + std::to_string(k) + " is not finite", k);
    }
  }
  std::stable_sort(pts.begin(), pts.end(),
                   [](const RawPoint& a, const RawPoint& b) { return a.ms < b.ms; });

  // Merge runs of coincident positions, keeping the first timestamp. The
  // threshold matches the one validate_sample applies afterwards.
  std::vector<TimedPoint> tmp;
  tmp.reserve(pts.size());
  for (const auto& r : pts) tmp.push_back({r.ms, r.p});
  const double threshold = tmp.empty() ? 0.0 : epsilon * bounding_diagonal(tmp);
  std::vector<RawPoint> merged;
  merged.reserve(pts.size());
  for (const auto& r : pts) {
    if (!merged.empty()) {
      const double d = norm(r.p - merged.back().p);
      if (!(d > threshold) || d == 0.0) continue;
    }
    merged.push_back(r);
  }
  if (merged.size() < 3) {
    throw Error(ErrorCode::TooFewPoints,
                "stroke has " + std::to_string(merged.size()) +
                    " distinct points after merging duplicates, needs 3");
  }

  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < merged.size(); ++k) {
    const double gap = merged[k].ms - merged[k - 1].ms;
    if (gap > 0.0) min_gap = std::min(min_gap, gap);
  }
  if (!std::isfinite(min_gap)) min_gap = 1.0;  // every timestamp equal

  // A run of m equal timestamps gets offsets j * (min_gap / 2) / m.
  std::vector<double> times(merged.size());
  for (std::size_t k = 0; k < merged.size();) {
    std::size_t end = k + 1;
    while (end < merged.size() && merged[end].ms == merged[k].ms) ++end;
    const double run = static_cast<double>(end - k);
    for (std::size_t j = k; j < end; ++j) {
      times[j] = merged[k].ms + static_cast<double>(j - k) * (0.5 * min_gap) / run;
    }
    k = end;
  }

  const double t0 = times.front();
  const double span = times.back() - t0;
  std::vector<TimedPoint> out(merged.size());
  for (std::size_t k = 0; k < merged.size(); ++k) {
    out[k] = {(times[k] - t0) / span, merged[k].p};
  }
  out.front().t = 0.0;
  out.back().t = 1.0;
  return validate_sample(std::move(out), epsilon);
}

SampledGesture transform(const SampledGesture& g, Vec2 translate, double scale, double rotate) {
  if (scale == 0.0 || !std::isfinite(scale)) {
    throw Error(ErrorCode::ZeroScale, "transform: scale must be finite and non-zero");
  }
  const double c = std::cos(rotate), s = std::sin(rotate);
  std::vector<TimedPoint> out;
  out.reserve(g.size());
  for (const auto& q : g.points()) {
    const Vec2 r{c * q.p.x - s * q.p.y, s * q.p.x + c * q.p.y};
    out.push_back({q.t, scale * r + translate});
  }
  return validate_sample(std::move(out));
}

AnalyticGesture circle_gesture(double r, double x0, double y0, double phase) {
  AnalyticGesture g;
  g.name = "circle";
  g.params = {{"r", r}, {"x0", x0}, {"y0", y0}, {"phase", phase}};
  g.eval = [=](double t) {
    const double a = kTwoPi * (t - phase);
    return Vec2{x0 + r * std::cos(a), y0 + r * std::sin(a)};
  };
  g.d1 = [=](double t) {
    const double a = kTwoPi * (t - phase);
    return Vec2{-kTwoPi * r * std::sin(a), kTwoPi * r * std::cos(a)};
  };
  g.d2 = [=](double t) {
    const double a = kTwoPi * (t - phase);
    const double k = kTwoPi * kTwoPi * r;
    return Vec2{-k * std::cos(a), -k * std::sin(a)};
  };
  return g;
}

AnalyticGesture line_gesture(Vec2 origin, Vec2 direction) {
  AnalyticGesture g;
  g.name = "line";
  g.params = {{"x0", origin.x}, {"y0", origin.y}, {"dx", direction.x}, {"dy", direction.y}};
  g.eval = [=](double t) { return origin + t * direction; };
  g.d1 = [=](double) { return direction; };
  g.d2 = [](double) { return Vec2{0.0, 0.0}; };
  return g;
}

AnalyticGesture parabola_gesture() {
  AnalyticGesture g;
  g.name = "parabola";
  g.eval = [](double t) { return Vec2{t, t * t}; };
  g.d1 = [](double t) { return Vec2{1.0, 2.0 * t}; };
  g.d2 = [](double) { return Vec2{0.0, 2.0}; };
  return g;
}

AnalyticGesture spiral_gesture(double r, double growth, double turn) {
  AnalyticGesture g;
  g.name = "spiral";
  g.params = {{"r", r}, {"growth", growth}, {"turn", turn}};
  const Complex c{growth, turn};
  auto value = [=](double t) { return r * std::exp(c * t); };
  g.eval = [=](double t) { return vec_of_complex(value(t)); };
  g.d1 = [=](double t) { return vec_of_complex(c * value(t)); };
  g.d2 = [=](double t) { return vec_of_complex(c * c * value(t)); };
  return g;
}

AnalyticGesture wave_gesture(double amplitude) {
  AnalyticGesture g;
  g.name = "wave";
  g.params = {{"amplitude", amplitude}};
  g.eval = [=](double t) { return Vec2{t, amplitude * std::sin(kTwoPi * t)}; };
  g.d1 = [=](double t) { return Vec2{1.0, amplitude * kTwoPi * std::cos(kTwoPi * t)}; };
  g.d2 = [=](double t) {
    return Vec2{0.0, -amplitude * kTwoPi * kTwoPi * std::sin(kTwoPi * t)};
  };
  return g;
}

const std::vector<AnalyticGesture>& fixtures() {
  static const std::vector<AnalyticGesture> all = {
      circle_gesture(), line_gesture(), parabola_gesture(), spiral_gesture(), wave_gesture(),
  };
  return all;
}

const AnalyticGesture& fixture(const std::string& name) {
  for (const auto& g : fixtures()) {
    if (g.name == name) return g;
  }
  throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + name + "'");
}

}  // namespace ftl
