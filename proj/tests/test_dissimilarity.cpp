#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ftl/dissimilarity.hpp"
#include "ftl/error.hpp"
#include "support/random.hpp"

using namespace ftl;
using ftl::testing::Rng;
using ftl::testing::rel_diff;

namespace {

constexpr double pi = std::numbers::pi;

SampledGesture three(Vec2 a, Vec2 b, Vec2 c, double mid = 0.5) {
  return validate_sample({{0, a}, {mid, b}, {1, c}});
}

}  // namespace

TEST_CASE("ftl worked example") {
  const auto f = three({0, 0}, {1, 0}, {1, 1});
  const auto g = three({0, 0}, {1, 0}, {2, 0});
  const auto r = ftl::ftl(f, g);
  CHECK(r.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(r.terms == 1);
  CHECK(r.mode == Mode::Uniform);
  CHECK(ftl::ftl(f, f).value == 0.0);
  CHECK(wftl(f, g).value == r.value);
  CHECK(dissimilarity(f, g, Mode::Weighted).mode == Mode::Weighted);
}

TEST_CASE("mode names") {
  CHECK(to_string(Mode::Uniform) == "uniform");
  CHECK(to_string(Mode::Weighted) == "weighted");
  CHECK(parse_mode("weighted") == Mode::Weighted);
  CHECK(parse_mode("uniform") == Mode::Uniform);
  CHECK_FALSE(parse_mode("UNIFORM"));
  CHECK_FALSE(parse_mode(""));
}

TEST_CASE("step weights") {
  const auto g = validate_sample({{0, {0, 0}}, {0.2, {1, 0}}, {0.6, {1, 1}}, {1, {0, 1}}});
  const auto w = step_weights(g);
  REQUIRE(w.size() == 2);
  CHECK(w[0] == doctest::Approx(2.0));
  CHECK(w[1] == doctest::Approx(1.0));
  const auto u = step_weights(uniform_sample(circle_gesture(), 999));
  for (double x : u) REQUIRE(x == 1.0);
}

TEST_CASE("isochrony is required") {
  const auto f = three({0, 0}, {1, 0}, {1, 1}, 0.5);
  const auto g = three({0, 0}, {1, 0}, {1, 1}, 0.4);
  CHECK_THROWS_AS(ftl::ftl(f, g), Error);
  const auto h = uniform_sample(circle_gesture(), 3);
  try {
    wftl(f, h);
    FAIL("expected SampleMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SampleMismatch);
  }
}

TEST_CASE("ftl and wftl properties on random samples") {
  Rng rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.index(2, 200);
    const bool grid = rng.coin();
    const auto t = rng.times(n, grid);
    const auto f = rng.walk(t), g = rng.walk(t);
    for (Mode mode : {Mode::Uniform, Mode::Weighted}) {
      const double d = dissimilarity(f, g, mode).value;
      CHECK(d >= 0.0);
      CHECK(dissimilarity(g, f, mode).value == d);
      CHECK(dissimilarity(f, f, mode).value == 0.0);
      const auto g2 = transform(g, rng.translation(), rng.scale(), rng.angle());
      CHECK(rel_diff(dissimilarity(f, g2, mode).value, d) <= 1e-10);
    }
    CHECK(dissimilarity(f, g, Mode::Uniform).terms == n - 1);
    if (grid) CHECK(wftl(f, g).value == ftl::ftl(f, g).value);
  }
}

TEST_CASE("shape sums") {
  const auto line = uniform_sample(line_gesture(), 50);
  const Complex s = shape_sum(line, false);
  CHECK(s.real() == doctest::Approx(49.0).epsilon(1e-13));
  CHECK(std::abs(s.imag()) < 1e-12);

  for (std::size_t n : {4u, 16u, 1000u}) {
    const auto c = uniform_sample(circle_gesture(), n);
    const Complex expected = static_cast<double>(n - 1) * std::polar(1.0, -2 * pi / n);
    CHECK(std::abs(shape_sum(c, false) - expected) <= 1e-9 * n);
    CHECK(shape_sum(c, true) == shape_sum(c, false));
  }

  // The centered sum misses half a step at each end, so its error is O(1/n):
  // about (2 + 2 pi^2 + 2 pi i) / n for the circle.
  for (std::size_t n : {1000u, 4000u}) {
    const auto c = uniform_sample(circle_gesture(), n);
    const double err = std::abs(centered_shape_sum(c) - Complex(2, -2 * pi));
    CHECK(err == doctest::Approx(std::abs(Complex(2 + 2 * pi * pi, 2 * pi)) / n).epsilon(0.01));
  }
  const auto l = centered_shape_sum(line);
  CHECK(std::abs(l - Complex(2, 0)) < 1e-9 + 2.0 / 50);
}

TEST_CASE("gesture shape of the fixtures") {
  const Complex c = gesture_shape(circle_gesture(), 0.3);
  CHECK(c.real() == doctest::Approx(1.0));
  CHECK(c.imag() == doctest::Approx(-pi).epsilon(1e-14));
  CHECK(gesture_shape(line_gesture(), 0.7) == Complex(1, 0));
  const Complex p = gesture_shape(parabola_gesture(), 0.0);
  CHECK(p.real() == doctest::Approx(1.0));
  CHECK(p.imag() == doctest::Approx(-1.0));
  CHECK(curvature_ratio(parabola_gesture(), 0.0) == Complex(0, 2));
  for (double t : {-1e-9, 1.0000001, 2.0}) {
    try {
      gesture_shape(circle_gesture(), t);
      FAIL("expected DomainError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DomainError);
    }
  }
  CHECK_NOTHROW(gesture_shape(circle_gesture(), 1.0));
}

TEST_CASE("shape functional") {
  CHECK(shape_functional(circle_gesture(), line_gesture()) == doctest::Approx(2 * pi).epsilon(1e-13));
  CHECK(shape_functional(circle_gesture(), circle_gesture()) == 0.0);
  CHECK(shape_functional(circle_gesture(), circle_gesture(5.0, 1.0, -2.0, 0.3)) < 1e-12);
  CHECK(shape_functional(line_gesture(), wave_gesture()) ==
        doctest::Approx(shape_functional(wave_gesture(), line_gesture())));

  // Parabola: g''/g' = 2i / (1 + 2it), |.| = 2 / sqrt(1 + 4t^2); integral = asinh(2).
  CHECK(shape_functional(parabola_gesture(), line_gesture()) ==
        doctest::Approx(std::asinh(2.0)).epsilon(1e-12));

  const Complex k = curvature_integral(spiral_gesture());
  CHECK(k.real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(k.imag() == doctest::Approx(3 * pi).epsilon(1e-12));
}
