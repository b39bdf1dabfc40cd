#pragma once

#include <Eigen/Core>
#include <cmath>
#include <vector>

#include "heilbronn/compression.hpp"
#include "heilbronn/errors.hpp"
#include "heilbronn/rng.hpp"

namespace heilbronn {

// Ball a tuple induces under compression: centered halfway between the tuple
// and its image, with the two of them as antipodal boundary points.
struct InducedBall {
  Vec source;
  double scale = 1.0;
  Vec center;
  double radius = 0.0;

  Eigen::Index dim() const { return center.size(); }
};

inline InducedBall induce_ball(const Vec& x, const CompressionScale& scale) {
  validate_tuple(x);
  InducedBall ball;
  ball.source = x;
  ball.scale = scale.m;
  ball.center = 0.5 * (x + compress(x, scale));
  ball.radius = 0.5 * gap(x, scale);
  return ball;
}

// Strict interior membership.
inline bool contains(const InducedBall& ball, const Vec& z) {
  if (z.size() != ball.dim()) throw dimension_mismatch_error("point/ball dimension mismatch");
  return (z - ball.center).norm() < ball.radius;
}

inline constexpr double kAdmissibleRelTol = 1e-9;

// On-sphere test with tolerance scaled to the ball size; the exact-equality
// definition is unattainable in floating point.
inline bool is_admissible(const InducedBall& ball, const Vec& y) {
  if (y.size() != ball.dim()) throw dimension_mismatch_error("point/ball dimension mismatch");
  const double tol = kAdmissibleRelTol * std::max(1.0, ball.radius);
  return std::abs((y - ball.center).norm() - ball.radius) <= tol;
}

// pi * gap^2 / 4, the area of the circle induced by a planar tuple.
inline double induced_circle_area(const Vec& x, const CompressionScale& scale) {
  if (x.size() != 2) throw dimension_mismatch_error("induced circle area is planar only");
  const double g = gap(x, scale);
  return 3.14159265358979323846264338327950288 * g * g / 4.0;
}

// k points on the induced circle of a planar tuple, interleaved with the
// source x and its image so that all k+2 points are equally spaced. x sits at
// its own angle, the image at that angle plus pi; the antipodal constraint
// forces k to be even.
inline std::vector<Eigen::Vector2d> admissible_points_on_circle(const Vec& x,
                                                                const CompressionScale& scale,
                                                                int k) {
  if (x.size() != 2) throw dimension_mismatch_error("circle placement is planar only");
  if (k < 1) throw precondition_error("k must be at least 1");
  if (k % 2 != 0)
    throw placement_conflict_error(
        "k must be even: x and its image are antipodal, so k+2 equally spaced points "
        "cannot interleave them for odd k");
  const InducedBall ball = induce_ball(x, scale);
  if (ball.radius <= 0.0) throw degenerate_ball_error("induced ball has zero radius");

  const double theta0 = std::atan2(x[1] - ball.center[1], x[0] - ball.center[0]);
  const int total = k + 2;
  const double step = 2.0 * 3.14159265358979323846264338327950288 / total;
  std::vector<Eigen::Vector2d> points;
  points.reserve(static_cast<std::size_t>(k));
  for (int j = 1; j < total; ++j) {
    if (j == total / 2) continue;  // slot taken by compress(x)
    const double theta = theta0 + step * j;
    points.emplace_back(ball.center[0] + ball.radius * std::cos(theta),
                        ball.center[1] + ball.radius * std::sin(theta));
  }
  return points;
}

// Uniform sample inside a ball: uniform direction, radius scaled by U^(1/n).
inline Vec sample_in_ball(const InducedBall& ball, Rng& rng) {
  const Eigen::Index n = ball.dim();
  Vec dir(n);
  double norm = 0.0;
  do {
    for (Eigen::Index i = 0; i < n; ++i) dir[i] = rng.normal();
    norm = dir.norm();
  } while (norm == 0.0);
  const double r = ball.radius * std::pow(rng.next_double(), 1.0 / static_cast<double>(n));
  return ball.center + (r / norm) * dir;
}

}  // namespace heilbronn
