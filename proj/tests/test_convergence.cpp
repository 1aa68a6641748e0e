#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "ftl/convergence.hpp"
#include "ftl/error.hpp"

using namespace ftl;

namespace {

constexpr double pi = std::numbers::pi;

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("ftl sweep errors shrink") {
  const std::vector<std::size_t> ns{100, 1000, 10000};
  for (const auto& mode : {SamplingMode::uniform(), SamplingMode::jittered(7, 0.3)}) {
    const auto rows = sweep_ftl(circle_gesture(), line_gesture(), ns, mode);
    REQUIRE(rows.size() == 3);
    for (std::size_t j = 0; j < rows.size(); ++j) {
      CHECK(rows[j].n == ns[j]);
      CHECK(rows[j].oracle.real() == doctest::Approx(2 * pi).epsilon(1e-12));
      CHECK(rows[j].abs_error == doctest::Approx(std::abs(rows[j].value - rows[j].oracle)));
      if (j > 0) CHECK(rows[j].abs_error < rows[j - 1].abs_error);
    }
    CHECK(loglog_slope(rows) < -0.9);
  }
  const auto r = sweep_ftl(circle_gesture(), line_gesture(), {10000}, SamplingMode::uniform());
  CHECK(r[0].delta == doctest::Approx(1e-4));
}

TEST_CASE("identical gestures give zero rows") {
  const auto rows = sweep_ftl(spiral_gesture(), spiral_gesture(), {10, 100}, SamplingMode::jittered(3, 0.4));
  for (const auto& row : rows) {
    CHECK(row.value == Complex(0, 0));
    CHECK(row.abs_error == 0.0);
    CHECK(std::isnan(row.rel_error));
  }
}

TEST_CASE("jittered timestamps") {
  const auto mode = SamplingMode::jittered(11, 0.45);
  const auto a = sweep_times(500, mode), b = sweep_times(500, mode);
  CHECK(a == b);
  CHECK(a != sweep_times(500, SamplingMode::jittered(12, 0.45)));
  CHECK(a.front() == 0.0);
  CHECK(a.back() == 1.0);
  for (std::size_t k = 1; k < a.size(); ++k) {
    CHECK(a[k] > a[k - 1]);
    if (k < 500) CHECK(std::abs(a[k] - k / 500.0) <= 0.45 / 500 + 1e-15);
  }
  CHECK(sweep_times(20, SamplingMode::jittered(1, 0.0)) == uniform_times(20));
  CHECK_THROWS_AS(sweep_times(20, SamplingMode::jittered(1, 0.5)), Error);
  CHECK_THROWS_AS(sweep_times(20, SamplingMode::jittered(1, -0.1)), Error);
  // A row does not depend on which other rows are in the sweep.
  const auto one = sweep_ftl(circle_gesture(), wave_gesture(), {300}, mode);
  const auto many = sweep_ftl(circle_gesture(), wave_gesture(), {30, 300, 3000}, mode);
  CHECK(one[0].value == many[1].value);
}

TEST_CASE("sweep arguments") {
  CHECK_THROWS_AS(sweep_ftl(circle_gesture(), line_gesture(), {100, 10}, {}), Error);
  CHECK_THROWS_AS(sweep_shape_sum(circle_gesture(), {1, 10}, {}), Error);
  CHECK(sweep_ftl(circle_gesture(), line_gesture(), {}, {}).empty());
}

TEST_CASE("shape sum sweeps") {
  const auto lit = sweep_shape_sum(circle_gesture(), {100, 1000}, {});
  CHECK(lit[0].oracle.real() == doctest::Approx(2.0));
  CHECK(lit[0].oracle.imag() == doctest::Approx(-2 * pi));
  // Terms tend to 1, so the literal sum tracks n - 1.
  CHECK(lit[1].value.real() == doctest::Approx(999.0).epsilon(1e-3));
  CHECK(lit[1].abs_error > lit[0].abs_error);

  const auto cen = sweep_centered_shape_sum(circle_gesture(), {100, 1000, 10000}, SamplingMode::jittered(5, 0.3));
  CHECK(cen[2].abs_error < cen[1].abs_error);
  CHECK(cen[1].abs_error < cen[0].abs_error);
  CHECK(cen[2].abs_error < 5e-3);
}

TEST_CASE("divided difference of a parabola") {
  // g is quadratic, so the second divided difference is g''/2 = i for any window.
  const auto rows = divided_difference_check(parabola_gesture(), 0.5, {{0.1, 0.1}, {0.05, 0.2}, {1e-3, 1e-4}});
  for (const auto& r : rows) {
    CHECK(std::abs(r.second_difference - Complex(0, 1)) < 1e-9);
    CHECK(r.second_difference_error < 1e-9);
    CHECK(r.target == 0.5 * Complex(0, 2) / Complex(1, 1));
  }
}

TEST_CASE("divided difference of the circle") {
  // For g = e^{2 pi i t} and a symmetric window h the expression is exactly
  // (1 - e^{-2 pi i h}) / (2h).
  const auto windows = halving_windows(1e-2, 1e-4);
  REQUIRE(windows.size() == 7);
  CHECK(windows.back().before == doctest::Approx(1.5625e-4));
  const auto rows = divided_difference_check(circle_gesture(), 0.4, windows);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const double h = windows[j].before;
    const Complex exact = (1.0 - std::polar(1.0, -2 * pi * h)) / (2 * h);
    CHECK(std::abs(rows[j].value - exact) < 1e-12 / h);  // cancellation in g2 - g1
    CHECK(std::abs(rows[j].target - Complex(0, pi)) < 1e-12);
    if (j > 0) CHECK(rows[j].abs_error < rows[j - 1].abs_error);
    CHECK(rows[j].abs_error == doctest::Approx(pi * pi * h).epsilon(0.01));
  }
  const auto asym = divided_difference_check(circle_gesture(), 0.4, {{1e-3, 2e-3}, {2e-3, 1e-3}});
  CHECK(asym[0].abs_error < 0.05);
  CHECK(asym[1].abs_error < 0.05);
}

TEST_CASE("divided difference domain") {
  for (Window w : {Window{0.2, 0.01}, Window{0.01, 0.95}, Window{0.0, 0.01}, Window{0.01, -0.01}}) {
    try {
      divided_difference_check(circle_gesture(), 0.1, {w});
      FAIL("expected WindowOutOfDomain");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::WindowOutOfDomain);
    }
  }
  CHECK_NOTHROW(divided_difference_check(circle_gesture(), 0.1, {{0.1, 0.9}}));
}

TEST_CASE("reports") {
  CHECK(emit_report({}, ReportFormat::Csv) == std::string(kCsvHeader) + "\n");
  CHECK(emit_report({}, ReportFormat::Json) == "[]\n");

  const auto rows = sweep_ftl(circle_gesture(), line_gesture(), {10, 20, 40}, {});
  const auto csv = lines(emit_report(rows, ReportFormat::Csv));
  REQUIRE(csv.size() == 4);
  CHECK(csv[0] == kCsvHeader);
  CHECK(csv[1].rfind("10,", 0) == 0);
  // 17 significant digits survive the text round trip.
  std::istringstream fields(csv[2]);
  std::string cell;
  std::vector<double> values;
  while (std::getline(fields, cell, ',')) values.push_back(std::stod(cell));
  REQUIRE(values.size() == 8);
  CHECK(values[2] == rows[1].value.real());
  CHECK(values[6] == rows[1].abs_error);

  const auto j = nlohmann::json::parse(emit_report(rows, ReportFormat::Json));
  REQUIRE(j.size() == 3);
  CHECK(j[2]["n"] == 40);
  CHECK(j[2]["value_re"].get<double>() == rows[2].value.real());
  CHECK(j[2]["rel_error"].get<double>() == rows[2].rel_error);

  const auto zero = sweep_ftl(line_gesture(), line_gesture(), {10}, {});
  CHECK(nlohmann::json::parse(emit_report(zero, ReportFormat::Json))[0]["rel_error"].is_null());
  CHECK(lines(emit_report(zero, ReportFormat::Csv))[1].find("nan") != std::string::npos);
  CHECK(std::isnan(loglog_slope(zero)));
}
