#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "heilbronn/ball.hpp"
#include "heilbronn/compression.hpp"
#include "heilbronn/configuration.hpp"
#include "heilbronn/enclosing_circle.hpp"
#include "heilbronn/errors.hpp"
#include "heilbronn/rng.hpp"

namespace heilbronn {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Parameter choices of the circle construction: m = log^2(s)/(4s) and
// Inf(x_j) = 1 + log(s)/sqrt(s), natural log.
struct ConstructionParams {
  int s = 0;
  double m = 0.0;
  double inf_coord = 0.0;
  double epsilon = 0.0;
  double delta = 1e-6;

  static ConstructionParams make(int s, double epsilon, double delta) {
    if (s < 5) throw precondition_error("construction requires s >= 5");
    if (!(epsilon >= 0.0)) throw precondition_error("epsilon must be nonnegative");
    if (!(delta > 0.0)) throw precondition_error("delta must be positive");
    ConstructionParams p;
    p.s = s;
    const double logs = std::log(static_cast<double>(s));
    p.m = logs * logs / (4.0 * static_cast<double>(s));
    if (!(p.m < 1.0)) throw precondition_error("derived m must be below 1");
    p.inf_coord = 1.0 + logs / std::sqrt(static_cast<double>(s));
    p.epsilon = epsilon;
    p.delta = delta;
    return p;
  }
};

// Equal-sector area pi * gap^2 / (4 (s-1)).
inline double sector_area(int s, double gap_value) {
  if (s < 4) throw precondition_error("sector_area requires s >= 4");
  if (!(gap_value >= 0.0)) throw precondition_error("gap must be nonnegative");
  return kPi * gap_value * gap_value / (4.0 * static_cast<double>(s - 1));
}

// s-point circle construction: the base tuple x, its compression image, s-3
// further admissible points interleaved at equal chord spacing, plus the ball
// center, normalized into the unit disc.
inline Configuration construct_configuration(int s, double epsilon = 0.0, double delta = 1e-6,
                                             double m_override = 0.0) {
  if ((s - 3) % 2 != 0)
    throw placement_conflict_error("construction requires s - 3 even (odd s)");
  ConstructionParams params = ConstructionParams::make(s, epsilon, delta);
  if (m_override > 0.0) params.m = CompressionScale::fixed(m_override).m;
  const CompressionScale scale = CompressionScale::fixed(params.m);

  Vec x(2);
  x << params.inf_coord, params.inf_coord + params.delta;
  const InducedBall ball = induce_ball(x, scale);
  const double g = 2.0 * ball.radius;

  Configuration config;
  config.provenance.kind = Provenance::Kind::PaperConstruction;
  config.provenance.s = s;
  config.provenance.m = params.m;
  config.provenance.epsilon = params.epsilon;
  config.provenance.delta = params.delta;

  if (g >= 1.0) {
    // The parameter formulas force gap > sqrt(2)*(1 - m) > 1, so the raw
    // circle never fits a unit disc on its own; the configuration is rescaled
    // below and the violation recorded.
    config.notes.push_back("gap " + std::to_string(g) +
                           " >= 1: raw circle does not fit a unit disc, rescaled");
  }

  const Vec image = compress(x, scale);
  const double theta0 = std::atan2(x[1] - ball.center[1], x[0] - ball.center[0]);
  const int on_circle = s - 1;
  std::vector<Eigen::Vector2d> raw;
  raw.reserve(static_cast<std::size_t>(s));
  for (int j = 0; j < on_circle; ++j) {
    if (j == 0) {
      raw.emplace_back(x[0], x[1]);
    } else if (j == on_circle / 2) {
      raw.emplace_back(image[0], image[1]);
    } else {
      const double theta = theta0 + 2.0 * kPi * j / on_circle;
      raw.emplace_back(ball.center[0] + ball.radius * std::cos(theta),
                       ball.center[1] + ball.radius * std::sin(theta));
    }
  }
  raw.emplace_back(ball.center[0], ball.center[1]);

  for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
    if (raw[i].x() == raw[i].y() || raw[i].x() == 0.0 || raw[i].y() == 0.0)
      config.notes.push_back("circle point " + std::to_string(i) +
                             " falls outside the compression domain (equal or zero coordinates)");
  }

  const bool fits = ball.center.norm() + ball.radius <= 1.0;
  if (fits) {
    config.transform = DiscTransform{};
    config.points = std::move(raw);
  } else {
    config.transform = DiscTransform{-ball.center[0], -ball.center[1], 1.0 / ball.radius};
    config.points.reserve(raw.size());
    for (const auto& p : raw) config.points.push_back(config.transform.apply(p));
  }
  config.validate();
  return config;
}

// s i.i.d. uniform points in the unit disc (polar method), coincidences
// resampled.
inline Configuration random_disc(int s, std::uint64_t seed) {
  if (s < 3) throw precondition_error("random_disc requires s >= 3");
  Rng rng(seed);
  Configuration config;
  config.provenance.kind = Provenance::Kind::RandomDisc;
  config.provenance.s = s;
  config.provenance.seed = seed;
  config.points.reserve(static_cast<std::size_t>(s));
  while (config.s() < s) {
    const double r = std::sqrt(rng.next_double());
    const double theta = 2.0 * kPi * rng.next_double();
    const Eigen::Vector2d p(r * std::cos(theta), r * std::sin(theta));
    bool fresh = true;
    for (const auto& q : config.points)
      if ((p - q).norm() == 0.0) {
        fresh = false;
        break;
      }
    if (fresh) config.points.push_back(p);
  }
  config.validate();
  return config;
}

// s points at angles 2*pi*j/s on the circle of radius r.
inline Configuration circle_equispaced(int s, double r = 1.0) {
  if (s < 3) throw precondition_error("circle_equispaced requires s >= 3");
  if (!(r > 0.0) || !(r <= 1.0)) throw precondition_error("radius must lie in (0, 1]");
  Configuration config;
  config.provenance.kind = Provenance::Kind::CircleEquispaced;
  config.provenance.s = s;
  config.provenance.r = r;
  config.points.reserve(static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) {
    const double theta = 2.0 * kPi * j / s;
    config.points.emplace_back(r * std::cos(theta), r * std::sin(theta));
  }
  config.validate();
  return config;
}

// Square lattice clipped to the unit disc, densified until it holds s nodes,
// truncated to s in row-major order. Collinear triples are expected; a zero
// minimal area is a legal measurement for this generator.
inline Configuration grid_disc(int s) {
  if (s < 3) throw precondition_error("grid_disc requires s >= 3");
  int g = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(s))));
  for (;; ++g) {
    std::vector<Eigen::Vector2d> nodes;
    for (int i = 0; i < g; ++i) {
      for (int j = 0; j < g; ++j) {
        const Eigen::Vector2d p(-1.0 + 2.0 * i / (g - 1), -1.0 + 2.0 * j / (g - 1));
        if (p.norm() <= 1.0) nodes.push_back(p);
      }
    }
    if (static_cast<int>(nodes.size()) >= s) {
      Configuration config;
      config.provenance.kind = Provenance::Kind::GridDisc;
      config.provenance.s = s;
      nodes.resize(static_cast<std::size_t>(s));
      config.points = std::move(nodes);
      config.validate();
      return config;
    }
  }
}

// Recenter on the smallest enclosing disc and scale it to radius 1.
inline Configuration normalize_to_unit_disc(const Configuration& config) {
  if (config.points.empty()) throw precondition_error("empty configuration");
  const Circle sec = smallest_enclosing_circle(config.points);
  if (sec.radius == 0.0)
    throw degenerate_configuration_error("all points coincide, nothing to normalize");
  Configuration out = config;
  const DiscTransform step{-sec.center.x(), -sec.center.y(), 1.0 / sec.radius};
  for (auto& p : out.points) p = step.apply(p);
  // compose: total = step o previous
  out.transform.lambda = config.transform.lambda * step.lambda;
  out.transform.tx = config.transform.tx + step.tx / config.transform.lambda;
  out.transform.ty = config.transform.ty + step.ty / config.transform.lambda;
  for (auto& p : out.points)
    if (p.norm() > 1.0) p *= (1.0 - 1e-15);  // shave rounding overshoot on boundary points
  out.validate();
  return out;
}

}  // namespace heilbronn
