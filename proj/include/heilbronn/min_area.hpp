#pragma once

#include <Eigen/Core>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "heilbronn/configuration.hpp"
#include "heilbronn/errors.hpp"

namespace heilbronn {

// ax*by - ay*bx with Kahan's fma correction, accurate to ~1.5 ulp, so sign
// and exact-zero detection are reliable at desk-scale magnitudes.
inline double cross2(double ax, double ay, double bx, double by) {
  const double w = ay * bx;
  const double e = std::fma(-ay, bx, w);
  const double f = std::fma(ax, by, -w);
  return f + e;
}

inline double triangle_area(const Eigen::Vector2d& p, const Eigen::Vector2d& q,
                            const Eigen::Vector2d& r) {
  return 0.5 * std::abs(cross2(q.x() - p.x(), q.y() - p.y(), r.x() - p.x(), r.y() - p.y()));
}

struct EvaluationReport {
  int s = 0;
  double min_area = 0.0;
  std::array<int, 3> argmin{0, 0, 0};
  std::map<std::string, double> bound_ratios;
  std::string provenance;
  double runtime_ms = 0.0;
};

// min_area / {1/s^2, log(s)/s^2, log(s)/(s*sqrt(s))}; natural log. The
// ratios carry unknown absolute constants and are reported, never asserted.
inline std::map<std::string, double> bound_comparison(int s, double min_area) {
  if (s < 4) throw precondition_error("bound_comparison requires s >= 4");
  const double sd = static_cast<double>(s);
  const double logs = std::log(sd);
  return {
      {"erdos_1_over_s2", min_area / (1.0 / (sd * sd))},
      {"kps_logs_over_s2", min_area / (logs / (sd * sd))},
      {"paper_logs_over_s_sqrt_s", min_area / (logs / (sd * std::sqrt(sd)))},
  };
}

namespace detail {

struct MinTriple {
  double area = std::numeric_limits<double>::infinity();
  int i = -1, j = -1, k = -1;

  // composite key: area first, then lexicographic indices (deterministic ties)
  bool operator<(const MinTriple& o) const {
    if (area != o.area) return area < o.area;
    if (i != o.i) return i < o.i;
    if (j != o.j) return j < o.j;
    return k < o.k;
  }
};

inline MinTriple min_over_range(const std::vector<Eigen::Vector2d>& pts, int i_begin, int i_end) {
  const int n = static_cast<int>(pts.size());
  MinTriple best;
  for (int i = i_begin; i < i_end; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const double a = triangle_area(pts[i], pts[j], pts[k]);
        const MinTriple cand{a, i, j, k};
        if (cand < best) best = cand;
      }
    }
  }
  return best;
}

inline int thread_budget() {
  int budget = static_cast<int>(std::thread::hardware_concurrency());
  if (budget < 1) budget = 1;
  if (const char* env = std::getenv("HEILBRONN_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1 && cap < budget) budget = cap;
  }
  return budget;
}

}  // namespace detail

// Exact minimum over all C(s,3) triples. Partitions the outer index across
// workers and merges by the composite (area, indices) key, so the result is
// independent of the worker count.
inline EvaluationReport min_triangle_area(const Configuration& config) {
  if (config.s() < 3) throw precondition_error("need at least 3 points");
  const auto start = std::chrono::steady_clock::now();
  const auto& pts = config.points;
  const int n = config.s();

  int workers = detail::thread_budget();
  if (workers > n - 2) workers = 1;

  detail::MinTriple best;
  if (workers <= 1) {
    best = detail::min_over_range(pts, 0, n - 2);
  } else {
    std::vector<detail::MinTriple> partial(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    // strided partition balances the triangular workload
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        detail::MinTriple local;
        for (int i = w; i < n - 2; i += workers) {
          const detail::MinTriple row = detail::min_over_range(pts, i, i + 1);
          if (row < local) local = row;
        }
        partial[static_cast<std::size_t>(w)] = local;
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& p : partial)
      if (p < best) best = p;
  }

  EvaluationReport report;
  report.s = n;
  report.min_area = best.area;
  report.argmin = {best.i, best.j, best.k};
  report.provenance = config.provenance.name();
  if (n >= 4) report.bound_ratios = bound_comparison(n, best.area);
  report.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

// Minimum over triples containing a fixed point (the construction's center
// triangles when anchor = s-1).
inline double min_area_through_point(const Configuration& config, int anchor) {
  const int n = config.s();
  if (anchor < 0 || anchor >= n) throw precondition_error("anchor index out of range");
  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    if (j == anchor) continue;
    for (int k = j + 1; k < n; ++k) {
      if (k == anchor) continue;
      const double a = triangle_area(config.points[anchor], config.points[j], config.points[k]);
      if (a < best) best = a;
    }
  }
  return best;
}

struct DecayFit {
  double slope = std::numeric_limits<double>::quiet_NaN();
  std::vector<int> excluded;  // indices of non-positive areas dropped from the fit
};

// Least-squares slope of log(min_area) against log(s).
inline DecayFit decay_exponent(const std::vector<std::pair<double, double>>& samples) {
  DecayFit fit;
  std::vector<std::pair<double, double>> usable;
  for (std::size_t idx = 0; idx < samples.size(); ++idx) {
    if (samples[idx].second > 0.0 && samples[idx].first > 0.0)
      usable.push_back(samples[idx]);
    else
      fit.excluded.push_back(static_cast<int>(idx));
  }
  if (usable.size() < 3)
    throw degenerate_configuration_error("decay fit needs at least 3 positive-area samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [s, area] : usable) {
    const double x = std::log(s);
    const double y = std::log(area);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(usable.size());
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return fit;
}

}  // namespace heilbronn
