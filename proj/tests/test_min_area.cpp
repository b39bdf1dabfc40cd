#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "heilbronn/generators.hpp"
#include "heilbronn/min_area.hpp"
#include "heilbronn/rng.hpp"
#include "reference_min_area.hpp"

using namespace heilbronn;

TEST_CASE("triangle_area basics") {
  CHECK(triangle_area({0, 0}, {1, 0}, {0, 1}) == 0.5);
  CHECK(triangle_area({0, 0}, {1, 1}, {2, 2}) == 0.0);
  CHECK(triangle_area({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}) ==
        doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-14));
}

TEST_CASE("min_triangle_area agrees with the double-double reference") {
  Rng rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const int s = 5 + static_cast<int>(rng.uniform_int(0, 55));
    const Configuration config = random_disc(s, 1000 + static_cast<std::uint64_t>(trial));
    const EvaluationReport report = min_triangle_area(config);
    const refmin::Result ref = refmin::min_triangle_area(config.points);
    CHECK(std::abs(report.min_area - ref.min_area) <= 1e-14);
    CHECK(report.argmin == ref.argmin);
    // report invariant: min_area is the area of the argmin triple
    const double direct = triangle_area(config.points[static_cast<std::size_t>(report.argmin[0])],
                                        config.points[static_cast<std::size_t>(report.argmin[1])],
                                        config.points[static_cast<std::size_t>(report.argmin[2])]);
    CHECK(std::abs(report.min_area - direct) <= 1e-15);
  }
}

TEST_CASE("equispaced circle minimum matches the closed form") {
  for (int s : {3, 7, 16, 100, 500, 1000}) {
    const double theta = 2.0 * kPi / s;
    const double r = 0.8;
    const double closed = (r * r / 2.0) * (2.0 * std::sin(theta) - std::sin(2.0 * theta));
    const double measured = min_triangle_area(circle_equispaced(s, r)).min_area;
    CHECK(std::abs(measured - closed) <= 1e-9 * closed);
  }
}

TEST_CASE("deterministic lexicographic tie-break") {
  // exact square: all four triples have area exactly 1
  Configuration square;
  square.points = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const EvaluationReport report = min_triangle_area(square);
  CHECK(report.argmin == std::array<int, 3>{0, 1, 2});
}

TEST_CASE("permutation invariance of the minimum") {
  const Configuration config = random_disc(15, 3);
  const double base = min_triangle_area(config).min_area;
  Configuration shuffled = config;
  std::reverse(shuffled.points.begin(), shuffled.points.end());
  // vertex order inside each triple changes, so agreement is up to rounding
  CHECK(min_triangle_area(shuffled).min_area == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("rigid motions and scalings act as expected") {
  const Configuration config = random_disc(12, 8);
  const double base = min_triangle_area(config).min_area;

  const double c = std::cos(0.7), sn = std::sin(0.7);
  Configuration moved = config;
  for (auto& p : moved.points)
    p = Eigen::Vector2d(c * p.x() - sn * p.y() + 0.1, sn * p.x() + c * p.y() - 0.05);
  // rotation can push points slightly outside; skip validate by direct call
  CHECK(std::abs(min_triangle_area(moved).min_area - base) <= 1e-12 * base);

  Configuration scaled = config;
  for (auto& p : scaled.points) p *= 0.5;
  CHECK(min_triangle_area(scaled).min_area == doctest::Approx(0.25 * base).epsilon(1e-12));
}

TEST_CASE("bound comparison ratios are definitional") {
  const auto r1 = bound_comparison(100, 1.0 / (100.0 * 100.0));
  CHECK(r1.at("erdos_1_over_s2") == doctest::Approx(1.0).epsilon(1e-12));
  const auto r2 = bound_comparison(100, std::log(100.0) / std::pow(100.0, 1.5));
  CHECK(r2.at("paper_logs_over_s_sqrt_s") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(bound_comparison(3, 1.0), precondition_error);
}

TEST_CASE("decay exponent recovers synthetic power laws") {
  std::vector<std::pair<double, double>> cubic;
  for (double s : {8.0, 16.0, 32.0, 64.0, 128.0}) cubic.emplace_back(s, 7.5 / (s * s * s));
  CHECK(decay_exponent(cubic).slope == doctest::Approx(-3.0).epsilon(1e-9));

  // equispaced circle family decays like s^-3 at large s
  std::vector<std::pair<double, double>> circle;
  for (int s : {64, 128, 256, 512, 1024})
    circle.emplace_back(s, min_triangle_area(circle_equispaced(s, 1.0)).min_area);
  CHECK(std::abs(decay_exponent(circle).slope + 3.0) <= 0.05);

  std::vector<std::pair<double, double>> with_zero = cubic;
  with_zero.emplace_back(256.0, 0.0);
  const DecayFit fit = decay_exponent(with_zero);
  CHECK(fit.slope == doctest::Approx(-3.0).epsilon(1e-9));
  REQUIRE(fit.excluded.size() == 1);
  CHECK(fit.excluded[0] == 5);

  std::vector<std::pair<double, double>> all_zero{{8.0, 0.0}, {16.0, 0.0}, {32.0, 0.0}};
  CHECK_THROWS_AS(decay_exponent(all_zero), degenerate_configuration_error);
}

TEST_CASE("min_area_through_point isolates center triangles") {
  const Configuration config = construct_configuration(9);
  const double through_center = min_area_through_point(config, config.s() - 1);
  // the center, the base point and its antipode are nearly collinear, so the
  // all-triples minimum collapses to rounding noise while circle-only triples
  // stay well away from zero
  Configuration circle_only = config;
  circle_only.points.pop_back();
  const double circle_min = min_triangle_area(circle_only).min_area;
  CHECK(through_center < circle_min);
  CHECK(through_center <= 1e-12);
  CHECK(circle_min > 1e-4);
}
