#pragma once

#include <Eigen/Core>
#include <cmath>
#include <vector>

#include "heilbronn/rng.hpp"

namespace heilbronn {

struct Circle {
  Eigen::Vector2d center{0.0, 0.0};
  double radius = 0.0;

  bool covers(const Eigen::Vector2d& p, double slack = 1e-12) const {
    return (p - center).norm() <= radius * (1.0 + slack) + slack;
  }
};

namespace detail {

inline Circle circle_from_two(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  Circle c;
  c.center = 0.5 * (a + b);
  c.radius = 0.5 * (a - b).norm();
  return c;
}

inline Circle circle_from_three(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                                const Eigen::Vector2d& c) {
  const Eigen::Vector2d ab = b - a;
  const Eigen::Vector2d ac = c - a;
  const double d = 2.0 * (ab.x() * ac.y() - ab.y() * ac.x());
  if (d == 0.0) {
    // collinear: fall back to the widest pair
    Circle best = circle_from_two(a, b);
    for (const Circle& cand : {circle_from_two(a, c), circle_from_two(b, c)})
      if (cand.radius > best.radius) best = cand;
    return best;
  }
  const double ab2 = ab.squaredNorm();
  const double ac2 = ac.squaredNorm();
  Circle out;
  out.center = a + Eigen::Vector2d(ac.y() * ab2 - ab.y() * ac2, ab.x() * ac2 - ac.x() * ab2) / d;
  out.radius = (a - out.center).norm();
  return out;
}

}  // namespace detail

// Welzl's move-to-front algorithm with a seeded shuffle, so the result is
// deterministic for a given input order.
inline Circle smallest_enclosing_circle(std::vector<Eigen::Vector2d> points) {
  if (points.empty()) return Circle{};
  if (points.size() == 1) return Circle{points[0], 0.0};

  Rng rng(0x5eb2023ULL);
  for (std::size_t i = points.size() - 1; i > 0; --i) {
    const std::size_t j =
        static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i)));
    std::swap(points[i], points[j]);
  }

  Circle c = detail::circle_from_two(points[0], points[1]);
  for (std::size_t i = 2; i < points.size(); ++i) {
    if (c.covers(points[i])) continue;
    // points[i] on the boundary
    c = detail::circle_from_two(points[0], points[i]);
    for (std::size_t j = 1; j < i; ++j) {
      if (c.covers(points[j])) continue;
      // points[i], points[j] on the boundary
      c = detail::circle_from_two(points[i], points[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (c.covers(points[k])) continue;
        c = detail::circle_from_three(points[i], points[j], points[k]);
      }
    }
  }
  return c;
}

}  // namespace heilbronn
