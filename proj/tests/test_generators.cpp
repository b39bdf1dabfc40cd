#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "heilbronn/enclosing_circle.hpp"
#include "heilbronn/generators.hpp"
#include "heilbronn/min_area.hpp"

using namespace heilbronn;

TEST_CASE("construction parameters follow the s formulas") {
  // natural log: m = log^2(100)/400, inf = 1 + log(100)/10
  const ConstructionParams p = ConstructionParams::make(100, 0.0, 1e-6);
  CHECK(p.m == doctest::Approx(0.0530).epsilon(1e-3));
  CHECK(p.inf_coord == doctest::Approx(1.4605).epsilon(1e-4));
  CHECK(CompressionScale::derived_from_s(100).m == doctest::Approx(p.m).epsilon(1e-15));
  CHECK_THROWS_AS(ConstructionParams::make(4, 0.0, 1e-6), precondition_error);
  CHECK_THROWS_AS(ConstructionParams::make(9, 0.0, 0.0), precondition_error);
}

TEST_CASE("construction yields s points with the documented layout") {
  const Configuration config = construct_configuration(9, 0.0, 1e-6);
  REQUIRE(config.s() == 9);
  config.validate();
  CHECK(config.provenance.kind == Provenance::Kind::PaperConstruction);

  // last point is the circle center; the other 8 lie on a common circle
  const Eigen::Vector2d center = config.points.back();
  const double radius = (config.points[0] - center).norm();
  CHECK(radius == doctest::Approx(1.0).epsilon(1e-12));  // rescaled to fill the disc
  for (int i = 0; i < 8; ++i)
    CHECK((config.points[i] - center).norm() == doctest::Approx(radius).epsilon(1e-9));

  CHECK_THROWS_AS(construct_configuration(8), placement_conflict_error);
}

TEST_CASE("raw circle points are admissible before normalization") {
  const ConstructionParams p = ConstructionParams::make(9, 0.0, 1e-6);
  const auto scale = CompressionScale::fixed(p.m);
  Vec x(2);
  x << p.inf_coord, p.inf_coord + p.delta;
  const InducedBall ball = induce_ball(x, scale);
  const Configuration config = construct_configuration(9);
  // undo the transform and check every circle point against the raw ball
  for (int i = 0; i < config.s() - 1; ++i) {
    const Eigen::Vector2d raw = config.transform.invert(config.points[i]);
    Vec y(2);
    y << raw.x(), raw.y();
    CHECK(is_admissible(ball, y));
  }
}

TEST_CASE("the s-1 center triangles and sectors are equal") {
  for (int s : {9, 17, 33}) {
    const Configuration config = construct_configuration(s);
    const Eigen::Vector2d center = config.points.back();
    const int ring = s - 1;
    const double radius = (config.points[0] - center).norm();
    const double gap_normalized = 2.0 * radius;
    const double expected_sector = sector_area(s, gap_normalized);

    std::vector<double> angles(ring);
    for (int i = 0; i < ring; ++i) {
      const Eigen::Vector2d d = config.points[i] - center;
      angles[static_cast<std::size_t>(i)] = std::atan2(d.y(), d.x());
    }
    double tri0 = -1.0;
    for (int i = 0; i < ring; ++i) {
      double dtheta = angles[static_cast<std::size_t>((i + 1) % ring)] -
                      angles[static_cast<std::size_t>(i)];
      while (dtheta <= 0) dtheta += 2.0 * kPi;
      while (dtheta > 2.0 * kPi) dtheta -= 2.0 * kPi;
      const double sector = 0.5 * radius * radius * dtheta;
      CHECK(std::abs(sector - expected_sector) <= 1e-9 * expected_sector);
      const double tri = triangle_area(config.points[i], config.points[(i + 1) % ring], center);
      if (tri0 < 0)
        tri0 = tri;
      else
        CHECK(std::abs(tri - tri0) <= 1e-9 * tri0);
      CHECK(tri < sector);  // inscribed triangle never exceeds its sector
    }
  }
}

TEST_CASE("center triangle to sector ratio climbs toward 1") {
  double prev = 0.0;
  for (int s : {9, 17, 33, 65, 129}) {
    const Configuration config = construct_configuration(s);
    const Eigen::Vector2d center = config.points.back();
    const double radius = (config.points[0] - center).norm();
    const double tri = triangle_area(config.points[0], config.points[1], center);
    const double sector = sector_area(s, 2.0 * radius);
    const double ratio = tri / sector;
    CHECK(ratio < 1.0);
    CHECK(ratio > prev);
    prev = ratio;
  }
}

TEST_CASE("sector area formula") {
  CHECK(sector_area(5, 2.0) == doctest::Approx(kPi / 4.0).epsilon(1e-15));
  CHECK(sector_area(5, 1.0) == doctest::Approx(kPi / 16.0).epsilon(1e-15));
  // sectors partition the induced circle
  Vec x(2);
  x << 2, 4;
  const auto one = CompressionScale::fixed(1.0);
  const double g = gap(x, one);
  CHECK(9.0 * sector_area(10, g) == doctest::Approx(induced_circle_area(x, one)).epsilon(1e-12));
  CHECK_THROWS_AS(sector_area(3, 1.0), precondition_error);
}

TEST_CASE("random_disc is deterministic and confined") {
  const Configuration a = random_disc(25, 99);
  const Configuration b = random_disc(25, 99);
  REQUIRE(a.s() == 25);
  for (int i = 0; i < a.s(); ++i) {
    CHECK((a.points[static_cast<std::size_t>(i)] - b.points[static_cast<std::size_t>(i)]).norm() ==
          0.0);
    CHECK(a.points[static_cast<std::size_t>(i)].norm() <= 1.0);
  }
  const Configuration c = random_disc(25, 100);
  CHECK((a.points[0] - c.points[0]).norm() != 0.0);
}

TEST_CASE("circle_equispaced hits the closed forms") {
  const Configuration square = circle_equispaced(4, 1.0);
  CHECK(square.points[0].x() == doctest::Approx(1.0));
  CHECK(square.points[1].y() == doctest::Approx(1.0));

  const Configuration tri = circle_equispaced(3, 1.0);
  CHECK(min_triangle_area(tri).min_area ==
        doctest::Approx(3.0 * std::sqrt(3.0) / 4.0).epsilon(1e-12));

  for (int s : {5, 8, 13, 40}) {
    const double theta = 2.0 * kPi / s;
    const double closed = 0.5 * (2.0 * std::sin(theta) - std::sin(2.0 * theta));
    CHECK(min_triangle_area(circle_equispaced(s, 1.0)).min_area ==
          doctest::Approx(closed).epsilon(1e-9));
  }
}

TEST_CASE("grid_disc is deterministic and reports collinear minima as zero") {
  const Configuration a = grid_disc(9);
  const Configuration b = grid_disc(9);
  REQUIRE(a.s() == 9);
  for (int i = 0; i < 9; ++i)
    CHECK((a.points[static_cast<std::size_t>(i)] - b.points[static_cast<std::size_t>(i)]).norm() ==
          0.0);
  CHECK(min_triangle_area(a).min_area == 0.0);  // axis-aligned collinear triples

  const Configuration c = grid_disc(3);
  CHECK(c.s() == 3);
}

TEST_CASE("normalize_to_unit_disc recenters and rescales") {
  const Configuration base = circle_equispaced(7, 1.0);
  const Configuration renorm = normalize_to_unit_disc(base);
  CHECK(renorm.transform.lambda == doctest::Approx(1.0).epsilon(1e-12));

  // shrink by 0.3, then normalization should blow areas back up by (1/0.3)^2
  Configuration small = base;
  for (auto& p : small.points) p *= 0.3;
  const double small_area = min_triangle_area(small).min_area;
  const Configuration restored = normalize_to_unit_disc(small);
  const double restored_area = min_triangle_area(restored).min_area;
  CHECK(restored_area == doctest::Approx(small_area / 0.09).epsilon(1e-12));

  double max_norm = 0.0;
  for (const auto& p : restored.points) max_norm = std::max(max_norm, p.norm());
  CHECK(max_norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("smallest enclosing circle covers all points with a tight boundary") {
  Rng rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Eigen::Vector2d> pts;
    const int n = 3 + static_cast<int>(rng.uniform_int(0, 20));
    for (int i = 0; i < n; ++i)
      pts.emplace_back(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    const Circle c = smallest_enclosing_circle(pts);
    int on_boundary = 0;
    for (const auto& p : pts) {
      const double d = (p - c.center).norm();
      CHECK(d <= c.radius * (1.0 + 1e-9) + 1e-12);
      if (std::abs(d - c.radius) <= 1e-9 * std::max(1.0, c.radius)) ++on_boundary;
    }
    CHECK(on_boundary >= 2);
  }
}
