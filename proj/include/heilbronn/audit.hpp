#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "heilbronn/ball.hpp"
#include "heilbronn/compression.hpp"
#include "heilbronn/errors.hpp"
#include "heilbronn/rng.hpp"

namespace heilbronn {

inline constexpr std::size_t kMaxCounterexamples = 10;

// Tally of one theorem audit. The audited statements are measured, not
// assumed, so failures are data rather than errors.
struct AuditRecord {
  std::string name;
  std::uint64_t samples = 0;
  std::uint64_t passes = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> counterexamples;  // first kMaxCounterexamples seen

  void tally(bool pass, const std::string& witness = std::string());

  bool operator==(const AuditRecord& other) const {
    return name == other.name && samples == other.samples && passes == other.passes &&
           failures == other.failures && counterexamples == other.counterexamples;
  }
};

inline void AuditRecord::tally(bool pass, const std::string& witness) {
  ++samples;
  if (pass) {
    ++passes;
  } else {
    ++failures;
    if (counterexamples.size() < kMaxCounterexamples && !witness.empty())
      counterexamples.push_back(witness);
  }
}

namespace detail {

inline std::string describe_tuple(const Vec& x) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (i) os << ", ";
    os << x[i];
  }
  os << ")";
  return os.str();
}

}  // namespace detail

// One evaluation of the membership/gap biconditional:
// z in ball(x) <=> gap(z) < gap(x).
struct DeciderCase {
  bool in_ball = false;
  bool gap_smaller = false;
  bool holds() const { return in_ball == gap_smaller; }
};

inline DeciderCase check_decider(const Vec& x, const Vec& z, const CompressionScale& scale) {
  if (x.size() != z.size()) throw dimension_mismatch_error("decider tuples differ in dimension");
  DeciderCase c;
  c.in_ball = contains(induce_ball(x, scale), z);
  c.gap_smaller = gap(z, scale) < gap(x, scale);
  return c;
}

// Monte Carlo nesting check: sample inside ball(y) and count how many of the
// samples also fall inside ball(x). Requires y strictly inside ball(x).
struct NestingCase {
  std::uint64_t samples = 0;
  std::uint64_t contained = 0;
  bool all_contained() const { return contained == samples; }
};

inline NestingCase check_nesting(const Vec& x, const Vec& y, const CompressionScale& scale,
                                 std::uint64_t sample_count, Rng& rng) {
  const InducedBall outer = induce_ball(x, scale);
  if (!contains(outer, y))
    throw precondition_error("nesting check requires y strictly inside the ball of x");
  const InducedBall inner = induce_ball(y, scale);
  NestingCase c;
  c.samples = sample_count;
  if (inner.radius == 0.0) {
    c.contained = sample_count;  // degenerate inner ball, trivially nested
    return c;
  }
  for (std::uint64_t i = 0; i < sample_count; ++i) {
    if (contains(outer, sample_in_ball(inner, rng))) ++c.contained;
  }
  return c;
}

// y admissible for ball(x)  <=>  balls identical and gaps equal.
struct AdmissibleEquivalenceCase {
  bool admissible = false;
  bool balls_equal = false;
  bool gaps_equal = false;
  bool holds() const { return admissible == (balls_equal && gaps_equal); }
};

inline AdmissibleEquivalenceCase check_admissible_equivalence(const Vec& x, const Vec& y,
                                                              const CompressionScale& scale,
                                                              double tol = 1e-9) {
  if (x.size() != y.size())
    throw dimension_mismatch_error("equivalence tuples differ in dimension");
  const InducedBall bx = induce_ball(x, scale);
  const InducedBall by = induce_ball(y, scale);
  AdmissibleEquivalenceCase c;
  c.admissible = is_admissible(bx, y);
  c.balls_equal =
      (bx.center - by.center).norm() <= tol && std::abs(bx.radius - by.radius) <= tol;
  c.gaps_equal = std::abs(gap(x, scale) - gap(y, scale)) <= tol;
  return c;
}

// --- sweep drivers -----------------------------------------------------------

namespace detail {

// Distinct positive integer tuple, coordinates in [1, max_coord].
inline Vec random_integer_tuple(Rng& rng, int dim, std::int64_t max_coord) {
  Vec x(dim);
  for (;;) {
    for (int i = 0; i < dim; ++i)
      x[i] = static_cast<double>(rng.uniform_int(1, max_coord));
    bool distinct = true;
    for (int i = 0; i < dim && distinct; ++i)
      for (int j = i + 1; j < dim; ++j)
        if (x[i] == x[j]) {
          distinct = false;
          break;
        }
    if (distinct) return x;
  }
}

// Mixed-sign real tuple with log-uniform magnitudes in [lo_mag, hi_mag].
inline Vec random_real_tuple(Rng& rng, int dim, double lo_mag = 1e-3, double hi_mag = 1e3) {
  Vec x(dim);
  for (;;) {
    for (int i = 0; i < dim; ++i) {
      const double mag = std::exp(rng.uniform(std::log(lo_mag), std::log(hi_mag)));
      x[i] = (rng.next_u64() & 1) ? mag : -mag;
    }
    bool distinct = true;
    for (int i = 0; i < dim && distinct; ++i)
      for (int j = i + 1; j < dim; ++j)
        if (x[i] == x[j]) {
          distinct = false;
          break;
        }
    if (distinct) return x;
  }
}

inline CompressionScale random_scale(Rng& rng) {
  // (0, 1]; flip the half-open unit interval so 1 is attainable.
  return CompressionScale::fixed(1.0 - rng.next_double());
}

}  // namespace detail

inline AuditRecord audit_decider_integer(std::uint64_t samples, std::uint64_t seed, int dim = 2,
                                         std::int64_t max_coord = 50) {
  Rng rng(seed);
  AuditRecord rec;
  rec.name = "decider_integer";
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Vec x = detail::random_integer_tuple(rng, dim, max_coord);
    const Vec z = detail::random_integer_tuple(rng, dim, max_coord);
    const CompressionScale m = detail::random_scale(rng);
    const DeciderCase c = check_decider(x, z, m);
    rec.tally(c.holds(), "x=" + detail::describe_tuple(x) + " z=" + detail::describe_tuple(z) +
                             " m=" + std::to_string(m.m));
  }
  return rec;
}

inline AuditRecord audit_decider_real(std::uint64_t samples, std::uint64_t seed, int dim = 2) {
  Rng rng(seed);
  AuditRecord rec;
  rec.name = "decider_real";
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Vec x = detail::random_real_tuple(rng, dim);
    const Vec z = detail::random_real_tuple(rng, dim);
    const CompressionScale m = detail::random_scale(rng);
    const DeciderCase c = check_decider(x, z, m);
    rec.tally(c.holds(), "x=" + detail::describe_tuple(x) + " z=" + detail::describe_tuple(z) +
                             " m=" + std::to_string(m.m));
  }
  return rec;
}

// Each trial draws an integer x, locates an integer-valued y strictly inside
// its ball, then Monte Carlo samples ball(y). A trial passes when every
// sample stays inside ball(x).
inline AuditRecord audit_nesting(std::uint64_t trials, std::uint64_t inner_samples,
                                 std::uint64_t seed, std::int64_t max_coord = 20) {
  Rng rng(seed);
  AuditRecord rec;
  rec.name = "nesting";
  for (std::uint64_t t = 0; t < trials; ++t) {
    Vec x, y;
    CompressionScale m = CompressionScale::fixed(1.0);
    bool found = false;
    while (!found) {
      x = detail::random_integer_tuple(rng, 2, max_coord);
      m = detail::random_scale(rng);
      const InducedBall ball = induce_ball(x, m);
      // scan the lattice inside the bounding box for a valid interior tuple
      const std::int64_t lo0 = static_cast<std::int64_t>(std::ceil(ball.center[0] - ball.radius));
      const std::int64_t hi0 = static_cast<std::int64_t>(std::floor(ball.center[0] + ball.radius));
      const std::int64_t lo1 = static_cast<std::int64_t>(std::ceil(ball.center[1] - ball.radius));
      const std::int64_t hi1 = static_cast<std::int64_t>(std::floor(ball.center[1] + ball.radius));
      std::vector<Vec> candidates;
      for (std::int64_t a = lo0; a <= hi0; ++a) {
        for (std::int64_t b = lo1; b <= hi1; ++b) {
          if (a == 0 || b == 0 || a == b) continue;
          Vec cand(2);
          cand[0] = static_cast<double>(a);
          cand[1] = static_cast<double>(b);
          if (contains(ball, cand)) candidates.push_back(cand);
        }
      }
      if (!candidates.empty()) {
        y = candidates[static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<std::int64_t>(candidates.size()) - 1))];
        found = true;
      }
    }
    const NestingCase c = check_nesting(x, y, m, inner_samples, rng);
    rec.tally(c.all_contained(),
              "x=" + detail::describe_tuple(x) + " y=" + detail::describe_tuple(y) +
                  " m=" + std::to_string(m.m) + " contained=" + std::to_string(c.contained) +
                  "/" + std::to_string(c.samples));
  }
  return rec;
}

// Admissible points constructed on induced circles, checked against the
// ball-identity/gap-equality characterization.
inline AuditRecord audit_admissible(std::uint64_t points, std::uint64_t seed) {
  Rng rng(seed);
  AuditRecord rec;
  rec.name = "admissible_equivalence";
  while (rec.samples < points) {
    const Vec x = detail::random_real_tuple(rng, 2, 1.0, 10.0);
    const CompressionScale m = detail::random_scale(rng);
    if (gap(x, m) <= 0.0) continue;
    const int k = 4;
    const auto circle = admissible_points_on_circle(x, m, k);
    for (const auto& p : circle) {
      if (rec.samples >= points) break;
      Vec y(2);
      y << p[0], p[1];
      if (y[0] == y[1] || y[0] == 0.0 || y[1] == 0.0) continue;  // outside the map's domain
      const AdmissibleEquivalenceCase c = check_admissible_equivalence(x, y, m);
      rec.tally(c.holds(), "x=" + detail::describe_tuple(x) + " y=" + detail::describe_tuple(y) +
                               " m=" + std::to_string(m.m));
    }
  }
  return rec;
}

}  // namespace heilbronn
