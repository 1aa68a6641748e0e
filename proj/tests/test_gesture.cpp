#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ftl/error.hpp"
#include "ftl/gesture.hpp"
#include "support/random.hpp"

using namespace ftl;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected ftl::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("validate_sample") {
  const auto ok = validate_sample({{0, {0, 0}}, {0.5, {1, 0}}, {1, {1, 1}}});
  CHECK(ok.intervals() == 2);
  CHECK(ok.deltas() == std::vector<Vec2>{{1, 0}, {0, 1}});

  try {
    validate_sample({{0, {0, 0}}, {0.5, {0, 0}}, {1, {1, 1}}});
    FAIL("expected ZeroDelta");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDelta);
    REQUIRE(e.index());
    CHECK(*e.index() == 1);
  }
  CHECK(code_of([] { validate_sample({{0, {0, 0}}, {1, {1, 0}}}); }) == ErrorCode::TooFewPoints);
  CHECK(code_of([] { validate_sample({{0, {0, 0}}, {0.7, {1, 0}}, {0.5, {2, 0}}, {1, {3, 0}}}); }) ==
        ErrorCode::NonmonotoneTime);
  CHECK(code_of([] { validate_sample({{0, {0, 0}}, {0.5, {1, 0}}, {0.5, {2, 0}}, {1, {3, 0}}}); }) ==
        ErrorCode::NonmonotoneTime);
  CHECK(code_of([] { validate_sample({{0.1, {0, 0}}, {0.5, {1, 0}}, {1, {2, 0}}}); }) ==
        ErrorCode::UnnormalizedTime);
  CHECK(code_of([] { validate_sample({{0, {0, 0}}, {0.5, {1, 0}}, {0.9, {2, 0}}}); }) ==
        ErrorCode::UnnormalizedTime);
  CHECK(code_of([] { validate_sample({{0, {0, 0}}, {0.5, {NAN, 0}}, {1, {2, 0}}}); }) ==
        ErrorCode::NonFinite);
  // Zero delta is judged relative to the gesture extent.
  CHECK(code_of([] { validate_sample({{0, {0, 0}}, {0.5, {1e3, 0}}, {1, {1e3 + 1e-10, 0}}}); }) ==
        ErrorCode::ZeroDelta);
  CHECK_NOTHROW(validate_sample({{0, {0, 0}}, {0.5, {1e-6, 0}}, {1, {2e-6, 1e-6}}}));
}

TEST_CASE("uniform_sample") {
  const auto c = uniform_sample(circle_gesture(), 4);
  const Vec2 expected[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}};
  REQUIRE(c.size() == 5);
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(c[k].t == static_cast<double>(k) / 4.0);
    CHECK(c[k].p.x == doctest::Approx(expected[k].x).epsilon(1e-15).scale(1));
    CHECK(c[k].p.y == doctest::Approx(expected[k].y).epsilon(1e-15).scale(1));
  }

  const auto line = line_gesture({1, 2}, {3, -1});
  const auto s = uniform_sample(line, 10);
  for (const auto& d : s.deltas()) {
    CHECK(d.x == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(d.y == doctest::Approx(-0.1).epsilon(1e-12));
  }
  CHECK_THROWS_AS(uniform_sample(circle_gesture(), 1), Error);

  for (const auto& g : fixtures()) {
    for (std::size_t n : {2u, 3u, 7u, 32u, 1000u, 10000u}) {
      CHECK_NOTHROW(uniform_sample(g, n));
    }
  }
}

TEST_CASE("clean_stroke") {
  const std::vector<RawPoint> doubled{{10, {0, 0}}, {20, {1, 0}}, {25, {1, 0}}, {30, {1, 1}}};
  const auto a = clean_stroke(doubled);
  REQUIRE(a.size() == 3);
  CHECK(a[1].t == doctest::Approx(0.5));  // first timestamp of the merged run kept

  const std::vector<RawPoint> plain{{10, {0, 0}}, {20, {1, 0}}, {30, {1, 1}}};
  const auto b = clean_stroke(plain);
  CHECK(b.times() == std::vector<double>{0.0, 0.5, 1.0});

  const std::vector<RawPoint> same(5, RawPoint{3, {2, 2}});
  CHECK(code_of([&] { clean_stroke(same); }) == ErrorCode::TooFewPoints);

  // Equal timestamps are spread inside half the smallest gap.
  const std::vector<RawPoint> ties{{0, {0, 0}}, {10, {1, 0}}, {10, {2, 0}}, {30, {3, 1}}};
  const auto c = clean_stroke(ties);
  REQUIRE(c.size() == 4);
  CHECK(c[2].t > c[1].t);
  CHECK(c[2].t == doctest::Approx((10.0 + 2.5) / 30.0));

  // Out-of-order device events are put in time order.
  const std::vector<RawPoint> shuffled{{20, {1, 0}}, {10, {0, 0}}, {30, {1, 1}}};
  CHECK(clean_stroke(shuffled) == b);
}

TEST_CASE("clean_stroke is idempotent") {
  ftl::testing::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RawPoint> raw;
    double ms = rng.uniform(0, 1000);
    Vec2 p = rng.translation();
    for (std::size_t k = 0; k < 3 + rng.index(0, 40); ++k) {
      raw.push_back({ms, p});
      if (rng.index(0, 4) != 0) ms += rng.uniform(0, 20);           // sometimes equal times
      if (rng.index(0, 4) != 0) p = p + rng.vec();                   // sometimes repeated points
    }
    SampledGesture once = [&] {
      try {
        return clean_stroke(raw);
      } catch (const Error&) {
        return validate_sample({{0, {0, 0}}, {0.5, {1, 0}}, {1, {1, 1}}});
      }
    }();
    std::vector<RawPoint> again;
    for (const auto& q : once.points()) again.push_back({q.t, q.p});
    CHECK(clean_stroke(again) == once);
  }
}

TEST_CASE("transform") {
  const auto g = validate_sample({{0, {1, 0}}, {0.4, {2, 1}}, {1, {0, 3}}});
  CHECK(transform(g, {0, 0}, 1.0, 0.0) == g);

  const auto r = transform(validate_sample({{0, {1, 0}}, {0.5, {2, 0}}, {1, {2, 1}}}), {0, 0}, 1.0,
                           std::numbers::pi / 2);
  CHECK(r[0].p.x == doctest::Approx(0.0).scale(1));
  CHECK(r[0].p.y == doctest::Approx(1.0));

  const auto neg = transform(g, {0, 0}, -1.0, 0.0);
  for (std::size_t k = 0; k < g.size(); ++k) {
    CHECK(neg[k].p == Vec2{-g[k].p.x, -g[k].p.y});
  }
  CHECK(code_of([&] { transform(g, {0, 0}, 0.0, 1.0); }) == ErrorCode::ZeroScale);

  ftl::testing::Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = rng.walk(rng.times(3 + rng.index(0, 30), rng.coin()));
    const auto t = transform(s, rng.translation(), rng.scale(), rng.angle());
    CHECK(t.times() == s.times());
  }
}

TEST_CASE("fixtures") {
  CHECK(fixtures().size() == 5);
  const auto c = circle_gesture();
  CHECK(c.eval(0) == Vec2{1, 0});
  CHECK(c.d1(0).x == doctest::Approx(0.0).scale(1));
  CHECK(c.d1(0).y == doctest::Approx(2 * std::numbers::pi));
  for (double t : {0.0, 0.3, 1.0}) CHECK(parabola_gesture().d2(t) == Vec2{0, 2});
  CHECK(fixture("spiral").name == "spiral");
  CHECK(code_of([] { fixture("triangle"); }) == ErrorCode::UnknownFixture);
}

TEST_CASE("fixture derivatives match finite differences") {
  std::vector<AnalyticGesture> all = fixtures();
  all.push_back(circle_gesture(5.0, -2.0, 3.0, 0.37));
  all.push_back(line_gesture({-1, 4}, {0.2, -3}));
  for (const auto& g : all) {
    CAPTURE(g.name);
    double worst1 = 0, worst2 = 0;
    for (int k = 0; k < 1000; ++k) {
      const double t = k / 999.0;
      const double h1 = 1e-5, h2 = 1e-4;
      const Vec2 fd1 = (1.0 / (2 * h1)) * (g.eval(t + h1) - g.eval(t - h1));
      const Vec2 fd2 = (1.0 / (h2 * h2)) * (g.eval(t + h2) - 2.0 * g.eval(t) + g.eval(t - h2));
      worst1 = std::max(worst1, norm(fd1 - g.d1(t)) / (1 + norm(g.d1(t))));
      worst2 = std::max(worst2, norm(fd2 - g.d2(t)) / (1 + norm(g.d2(t))));
      CHECK(norm(g.d1(t)) > 0.0);
    }
    CHECK(worst1 <= 1e-6);
    CHECK(worst2 <= 1e-4);
  }
}
