#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "heilbronn/configuration.hpp"
#include "heilbronn/errors.hpp"
#include "heilbronn/generators.hpp"
#include "heilbronn/min_area.hpp"
#include "heilbronn/rng.hpp"

namespace heilbronn {

struct AnnealParams {
  long iterations = 100000;
  std::optional<double> initial_temp;  // default 0.1 / s^2
  double cooling = 0.9995;
  double step_scale = 0.25;
  std::uint64_t seed = 1;
  int restarts = 1;
  long audit_every = 512;  // accepted moves between full-recompute audits

  void validate() const {
    if (iterations < 1) throw precondition_error("iterations must be positive");
    if (initial_temp && !(*initial_temp > 0.0))
      throw precondition_error("initial_temp must be positive");
    if (!(cooling > 0.0) || !(cooling < 1.0))
      throw precondition_error("cooling must lie strictly in (0, 1)");
    if (!(step_scale > 0.0) || !(step_scale <= 1.0))
      throw precondition_error("step_scale must lie in (0, 1]");
    if (restarts < 1) throw precondition_error("restarts must be positive");
  }
};

struct TracePoint {
  long iteration = 0;
  double current_area = 0.0;
  double best_area = 0.0;
  double temperature = 0.0;
};

// Exact incremental objective. Every triple's (area, i, j, k) key lives in an
// ordered set; moving one point touches only the O(s^2) triples containing
// it. Keys are recomputed from positions, so erase/insert round-trips are
// bitwise exact and the set minimum always equals a full recomputation.
class MinAreaCache {
 public:
  using Key = std::tuple<double, int, int, int>;

  explicit MinAreaCache(std::vector<Eigen::Vector2d> points) : points_(std::move(points)) {
    const int n = size();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) triples_.insert(key_of(i, j, k));
  }

  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<Eigen::Vector2d>& points() const { return points_; }

  double min_area() const { return std::get<0>(*triples_.begin()); }

  // Objective after hypothetically moving one point; no state change.
  double evaluate_move(int moved, const Eigen::Vector2d& new_position) const {
    double best = min_excluding(moved);
    const int n = size();
    for (int j = 0; j < n; ++j) {
      if (j == moved) continue;
      for (int k = j + 1; k < n; ++k) {
        if (k == moved) continue;
        const double a = trial_area(moved, new_position, j, k);
        if (a < best) best = a;
      }
    }
    return best;
  }

  void commit_move(int moved, const Eigen::Vector2d& new_position) {
    const int n = size();
    for (int j = 0; j < n; ++j) {
      if (j == moved) continue;
      for (int k = j + 1; k < n; ++k) {
        if (k == moved) continue;
        triples_.erase(sorted_key(moved, j, k));
      }
    }
    points_[static_cast<std::size_t>(moved)] = new_position;
    for (int j = 0; j < n; ++j) {
      if (j == moved) continue;
      for (int k = j + 1; k < n; ++k) {
        if (k == moved) continue;
        triples_.insert(sorted_key(moved, j, k));
      }
    }
  }

  // Full O(s^3) recomputation; throws if the cache has drifted.
  void audit() const {
    const int n = size();
    std::size_t expected =
        static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6;
    if (triples_.size() != expected)
      throw cache_inconsistency_error("triple cache lost or duplicated entries");
    Key best{std::numeric_limits<double>::infinity(), -1, -1, -1};
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          const Key cand = key_of(i, j, k);
          if (cand < best) best = cand;
        }
    if (best != *triples_.begin())
      throw cache_inconsistency_error("cached minimum diverged from full recomputation");
  }

 private:
  Key key_of(int i, int j, int k) const {
    return {triangle_area(points_[static_cast<std::size_t>(i)],
                          points_[static_cast<std::size_t>(j)],
                          points_[static_cast<std::size_t>(k)]),
            i, j, k};
  }

  // Area with the moved point substituted, vertices taken in index order so
  // the result is bitwise identical to the key written by a later commit.
  double trial_area(int moved, const Eigen::Vector2d& pos, int j, int k) const {
    int idx[3] = {moved, j, k};
    std::sort(idx, idx + 3);
    auto at = [&](int i) -> const Eigen::Vector2d& {
      return i == moved ? pos : points_[static_cast<std::size_t>(i)];
    };
    return triangle_area(at(idx[0]), at(idx[1]), at(idx[2]));
  }

  Key sorted_key(int a, int b, int c) const {
    int i = a, j = b, k = c;
    if (i > j) std::swap(i, j);
    if (j > k) std::swap(j, k);
    if (i > j) std::swap(i, j);
    return key_of(i, j, k);
  }

  // Smallest cached area over triples avoiding one index; the scan from the
  // front terminates as soon as a triple misses the index.
  double min_excluding(int moved) const {
    for (const Key& key : triples_) {
      if (std::get<1>(key) != moved && std::get<2>(key) != moved && std::get<3>(key) != moved)
        return std::get<0>(key);
    }
    return std::numeric_limits<double>::infinity();  // s = 3 and every triple uses the point
  }

  std::vector<Eigen::Vector2d> points_;
  std::set<Key> triples_;
};

// Convenience wrapper: objective after moving one point of a configuration.
inline double incremental_min_area(const MinAreaCache& cache, int moved,
                                   const Eigen::Vector2d& new_position) {
  return cache.evaluate_move(moved, new_position);
}

struct AnnealResult {
  Configuration config;
  EvaluationReport report;
  std::vector<TracePoint> trace;
};

namespace detail {

struct ChainResult {
  std::vector<Eigen::Vector2d> best_points;
  double best_area = -1.0;
  std::vector<TracePoint> trace;
};

inline Eigen::Vector2d clamp_to_disc(Eigen::Vector2d p) {
  const double n = p.norm();
  if (n > 1.0) p /= n;
  return p;
}

inline ChainResult anneal_chain(const std::vector<Eigen::Vector2d>& init, const AnnealParams& params,
                                double initial_temp, Rng rng) {
  MinAreaCache cache(init);
  ChainResult out;
  out.best_points = cache.points();
  out.best_area = cache.min_area();
  double current = out.best_area;
  double temp = initial_temp;
  long accepted = 0;

  for (long it = 0; it < params.iterations; ++it) {
    const int moved = static_cast<int>(rng.uniform_int(0, cache.size() - 1));
    const double step =
        params.step_scale * std::max(temp / initial_temp, 0.01);
    const Eigen::Vector2d proposal = clamp_to_disc(
        cache.points()[static_cast<std::size_t>(moved)] +
        Eigen::Vector2d(step * rng.normal(), step * rng.normal()));
    const double candidate = cache.evaluate_move(moved, proposal);
    const double delta = candidate - current;
    if (delta >= 0.0 || rng.next_double() < std::exp(delta / temp)) {
      cache.commit_move(moved, proposal);
      current = candidate;
      ++accepted;
      if (params.audit_every > 0 && accepted % params.audit_every == 0) cache.audit();
      if (current > out.best_area) {
        out.best_area = current;
        out.best_points = cache.points();
        out.trace.push_back({it, current, out.best_area, temp});
      }
    }
    if (it % 1000 == 0) out.trace.push_back({it, current, out.best_area, temp});
    temp *= params.cooling;
  }
  cache.audit();
  out.trace.push_back({params.iterations, current, out.best_area, temp});
  return out;
}

}  // namespace detail

// Simulated annealing on the minimal triangle area, points confined to the
// closed unit disc by radial projection. Restarts run independent chains and
// the best objective wins, earlier seed on ties.
inline AnnealResult optimize(int s, const AnnealParams& params,
                             const Configuration* init = nullptr) {
  params.validate();
  if (s < 3) throw precondition_error("optimize requires s >= 3");
  if (init && init->s() != s) throw precondition_error("init configuration has wrong size");
  const double initial_temp =
      params.initial_temp ? *params.initial_temp : 0.1 / (static_cast<double>(s) * s);

  Rng root(params.seed);
  detail::ChainResult best;
  for (int r = 0; r < params.restarts; ++r) {
    Rng chain_rng = root.split(static_cast<std::uint64_t>(r));
    std::vector<Eigen::Vector2d> start;
    if (init) {
      start = init->points;
    } else {
      start = random_disc(s, params.seed * 0x10001ULL + static_cast<std::uint64_t>(r)).points;
    }
    detail::ChainResult chain = detail::anneal_chain(start, params, initial_temp, chain_rng);
    if (chain.best_area > best.best_area) best = std::move(chain);
  }

  AnnealResult result;
  result.config.points = best.best_points;
  result.config.provenance.kind = Provenance::Kind::Optimizer;
  result.config.provenance.s = s;
  result.config.provenance.seed = params.seed;
  result.config.provenance.run_id = "anneal-seed" + std::to_string(params.seed);
  result.config.validate();
  result.report = min_triangle_area(result.config);
  result.trace = std::move(best.trace);
  return result;
}

}  // namespace heilbronn
