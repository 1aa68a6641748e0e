#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "ftl/geometry.hpp"

namespace ftl {

struct TimedPoint {
  double t = 0.0;
  Vec2 p;

  friend constexpr bool operator==(const TimedPoint&, const TimedPoint&) = default;
};

class SampledGesture;

/// Checks the n-sample invariants in order: point count, finiteness,
/// endpoints pinned at 0 and 1, strictly increasing time, non-zero deltas.
/// Zero deltas are judged relative to the gesture's bounding-box diagonal.
/// Error indices name the offending point (ZeroDelta(k) for g_k - g_{k-1}).
SampledGesture validate_sample(std::vector<TimedPoint> points,
                               double epsilon = kDefaultEpsilon);

/// A regular n-sample: n+1 points, n >= 2, t_0 = 0 < ... < t_n = 1 and every
/// displacement non-zero. Instances only come out of validate_sample() (or
/// operations that preserve validity), so holding one is proof of validity.
class SampledGesture {
 public:
  std::span<const TimedPoint> points() const { return points_; }
  /// Number of intervals n (one less than the number of points).
  std::size_t intervals() const { return points_.size() - 1; }
  std::size_t size() const { return points_.size(); }
  const TimedPoint& operator[](std::size_t k) const { return points_[k]; }

  /// Displacements g_k - g_{k-1}, k = 1..n (index 0 holds the first).
  std::vector<Vec2> deltas() const;
  std::vector<double> times() const;

  friend bool operator==(const SampledGesture&, const SampledGesture&) = default;

 private:
  explicit SampledGesture(std::vector<TimedPoint> points) : points_(std::move(points)) {}
  friend SampledGesture validate_sample(std::vector<TimedPoint> points, double epsilon);

  std::vector<TimedPoint> points_;
};

/// Closed-form C^2 gesture with its first two derivatives.
struct AnalyticGesture {
  using Curve = std::function<Vec2(double)>;

  std::string name;
  Curve eval;
  Curve d1;
  Curve d2;
  std::map<std::string, double> params;
};

/// Samples g at the given timestamps (validated afterwards).
SampledGesture sample_at(const AnalyticGesture& g, std::span<const double> times);

/// Samples g at t_k = k/n. Throws InvalidArgument for n < 2.
SampledGesture uniform_sample(const AnalyticGesture& g, std::size_t n);

/// Timestamps k/n, k = 0..n, with t_n exactly 1.
std::vector<double> uniform_times(std::size_t n);

struct RawPoint {
  double ms = 0.0;
  Vec2 p;
};

/// Turns a device stroke into a valid n-sample: consecutive duplicate
/// positions are merged (first timestamp kept), equal timestamps are spread
/// by fractions of half the smallest positive gap, and time is mapped
/// affinely onto [0, 1].
SampledGesture clean_stroke(std::span<const RawPoint> raw,
                            double epsilon = kDefaultEpsilon);

/// p -> scale * R(rotate) p + translate; timestamps untouched.
SampledGesture transform(const SampledGesture& g, Vec2 translate, double scale,
                         double rotate);

AnalyticGesture circle_gesture(double r = 1.0, double x0 = 0.0, double y0 = 0.0,
                               double phase = 0.0);
AnalyticGesture line_gesture(Vec2 origin = {0.0, 0.0}, Vec2 direction = {1.0, 0.5});
AnalyticGesture parabola_gesture();
/// r e^{(b + ia) t}
AnalyticGesture spiral_gesture(double r = 1.0, double growth = 0.5,
                               double turn = 3.0 * std::numbers::pi);
/// (t, amplitude * sin(2 pi t))
AnalyticGesture wave_gesture(double amplitude = 0.25);

/// The named fixture set: circle, line, parabola, spiral, wave.
const std::vector<AnalyticGesture>& fixtures();
/// Throws UnknownFixture.
const AnalyticGesture& fixture(const std::string& name);

}  // namespace ftl
