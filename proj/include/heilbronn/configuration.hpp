#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "heilbronn/errors.hpp"

namespace heilbronn {

// Affine map (translate then scale) taking raw construction coordinates into
// the unit disc: p |-> lambda * (p + t).
struct DiscTransform {
  double tx = 0.0;
  double ty = 0.0;
  double lambda = 1.0;

  Eigen::Vector2d apply(const Eigen::Vector2d& p) const {
    return lambda * (p + Eigen::Vector2d(tx, ty));
  }
  Eigen::Vector2d invert(const Eigen::Vector2d& p) const {
    return p / lambda - Eigen::Vector2d(tx, ty);
  }
};

struct Provenance {
  enum class Kind { PaperConstruction, RandomDisc, GridDisc, CircleEquispaced, Optimizer };

  Kind kind = Kind::RandomDisc;
  int s = 0;
  double m = 0.0;        // PaperConstruction
  double epsilon = 0.0;  // PaperConstruction
  double delta = 0.0;    // PaperConstruction
  double r = 0.0;        // CircleEquispaced
  std::uint64_t seed = 0;
  std::string run_id;  // Optimizer

  std::string name() const {
    switch (kind) {
      case Kind::PaperConstruction: return "paper";
      case Kind::RandomDisc: return "random";
      case Kind::GridDisc: return "grid";
      case Kind::CircleEquispaced: return "circle";
      case Kind::Optimizer: return "optimizer";
    }
    return "unknown";
  }
};

// Ordered planar point set inside the closed unit disc, together with the
// transform that brought the raw coordinates there.
struct Configuration {
  std::vector<Eigen::Vector2d> points;
  DiscTransform transform;
  Provenance provenance;
  std::vector<std::string> notes;  // construction warnings, e.g. equal-coordinate circle points

  int s() const { return static_cast<int>(points.size()); }

  void validate() const {
    if (points.size() < 3) throw precondition_error("configuration needs at least 3 points");
    for (const auto& p : points) {
      if (p.norm() > 1.0 + 1e-12)
        throw precondition_error("configuration point escapes the unit disc");
    }
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j)
        if ((points[i] - points[j]).norm() == 0.0)
          throw precondition_error("configuration has coincident points");
  }
};

}  // namespace heilbronn
