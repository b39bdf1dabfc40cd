#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <string>

#include "heilbronn/errors.hpp"

namespace heilbronn {

template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Vec = VectorX<double>;

// Scale m of a compression, restricted to (0, 1].
struct CompressionScale {
  enum class Origin { Explicit, DerivedFromS };

  double m = 1.0;
  Origin origin = Origin::Explicit;
  int s = 0;  // meaningful only for DerivedFromS

  static CompressionScale fixed(double m) {
    if (!(m > 0.0) || !(m <= 1.0)) throw scale_error("compression scale must lie in (0, 1]");
    return CompressionScale{m, Origin::Explicit, 0};
  }

  // m = log^2(s) / (4 s), natural log.
  static CompressionScale derived_from_s(int s) {
    if (s < 5) throw scale_error("derived scale requires s >= 5 so that m < 1");
    const double logs = std::log(static_cast<double>(s));
    const double m = logs * logs / (4.0 * static_cast<double>(s));
    if (!(m > 0.0) || !(m <= 1.0)) throw scale_error("derived scale fell outside (0, 1]");
    return CompressionScale{m, Origin::DerivedFromS, s};
  }
};

// Neumaier compensated accumulator; deterministic for a fixed input order.
template <class Scalar>
class CompensatedSum {
 public:
  void add(Scalar value) {
    const Scalar t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      comp_ += (sum_ - t) + value;
    } else {
      comp_ += (value - t) + sum_;
    }
    sum_ = t;
  }
  Scalar value() const { return sum_ + comp_; }

 private:
  Scalar sum_ = Scalar(0);
  Scalar comp_ = Scalar(0);
};

// Domain check: n >= 2, no zero coordinate, coordinates pairwise distinct.
// Distinctness is exact (bitwise on the values), not tolerance based.
template <class Scalar>
void validate_tuple(const VectorX<Scalar>& x) {
  const Eigen::Index n = x.size();
  if (n < 2) throw invalid_tuple_error("tuple dimension must be at least 2");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (x[i] == Scalar(0)) throw invalid_tuple_error("tuple has a zero coordinate");
    if (!std::isfinite(static_cast<double>(x[i])))
      throw invalid_tuple_error("tuple has a non-finite coordinate");
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (x[i] == x[j]) throw invalid_tuple_error("tuple has duplicate coordinates");
}

// x |-> (m/x_1, ..., m/x_n). Involutive: applying it twice recovers x.
template <class Scalar>
VectorX<Scalar> compress(const VectorX<Scalar>& x, Scalar m) {
  validate_tuple(x);
  return (m * x.cwiseInverse()).eval();
}

inline Vec compress(const Vec& x, const CompressionScale& scale) {
  return compress<double>(x, scale.m);
}

// m * sum 1/x_i, accumulated in ascending index order.
template <class Scalar>
Scalar mass(const VectorX<Scalar>& x, Scalar m) {
  validate_tuple(x);
  CompensatedSum<Scalar> acc;
  for (Eigen::Index i = 0; i < x.size(); ++i) acc.add(Scalar(1) / x[i]);
  return m * acc.value();
}

inline double mass(const Vec& x, const CompressionScale& scale) {
  return mass<double>(x, scale.m);
}

// ||x - m/x||^2 via compensated accumulation of the squared components.
template <class Scalar>
Scalar gap_squared(const VectorX<Scalar>& x, Scalar m) {
  validate_tuple(x);
  CompensatedSum<Scalar> acc;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const Scalar d = x[i] - m / x[i];
    acc.add(d * d);
  }
  return acc.value();
}

template <class Scalar>
Scalar gap(const VectorX<Scalar>& x, Scalar m) {
  return std::sqrt(gap_squared(x, m));
}

inline double gap(const Vec& x, const CompressionScale& scale) { return gap<double>(x, scale.m); }

inline double gap_squared(const Vec& x, const CompressionScale& scale) {
  return gap_squared<double>(x, scale.m);
}

// gap^2 - [sum x_i^2 - 2 m n + m^2 sum 1/x_i^2]; identically zero in exact
// arithmetic, so the returned value is pure rounding noise.
template <class Scalar>
Scalar gap_identity_residual(const VectorX<Scalar>& x, Scalar m) {
  validate_tuple(x);
  const Scalar n = static_cast<Scalar>(x.size());
  CompensatedSum<Scalar> sq;
  CompensatedSum<Scalar> invsq;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    sq.add(x[i] * x[i]);
    invsq.add(Scalar(1) / (x[i] * x[i]));
  }
  const Scalar expansion = sq.value() - Scalar(2) * m * n + m * m * invsq.value();
  return gap_squared(x, m) - expansion;
}

inline double gap_identity_residual(const Vec& x, const CompressionScale& scale) {
  return gap_identity_residual<double>(x, scale.m);
}

namespace detail {

inline void validate_positive_integer_tuple(const Vec& x) {
  validate_tuple(x);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || x[i] != std::floor(x[i]))
      throw invalid_tuple_error("coordinates must be distinct positive integers");
  }
}

}  // namespace detail

struct MassBoundsResult {
  double lower = 0.0;
  double upper = 0.0;
  double mass = 0.0;
};

// Logarithmic envelope for the mass over distinct positive integer tuples.
// The envelope carries unknown absolute constants, so callers report the
// ratios mass/lower and mass/upper rather than asserting the sandwich.
inline MassBoundsResult mass_bounds(const Vec& x, const CompressionScale& scale) {
  detail::validate_positive_integer_tuple(x);
  const double n = static_cast<double>(x.size());
  const double inf = x.minCoeff();
  const double sup = x.maxCoeff();
  if (!(sup > n - 1.0)) throw bound_domain_error("sup(x_j) must exceed n - 1");
  MassBoundsResult r;
  r.lower = scale.m * std::log(1.0 / (1.0 - (n - 1.0) / sup));
  r.upper = scale.m * std::log(1.0 + (n - 1.0) / inf);
  r.mass = mass(x, scale);
  return r;
}

struct GapBoundsResult {
  double lower = 0.0;
  double upper = 0.0;
};

// Two-sided envelope for gap^2 over distinct positive integer tuples.
inline GapBoundsResult gap_bounds(const Vec& x, const CompressionScale& scale) {
  detail::validate_positive_integer_tuple(x);
  const double n = static_cast<double>(x.size());
  const double inf2 = x.cwiseAbs2().minCoeff();
  const double sup2 = x.cwiseAbs2().maxCoeff();
  if (!(sup2 > n - 1.0)) throw bound_domain_error("sup(x_j^2) must exceed n - 1");
  const double m = scale.m;
  GapBoundsResult r;
  r.upper = n * sup2 + m * m * std::log(1.0 + (n - 1.0) / inf2) - 2.0 * m * n;
  r.lower = n * inf2 + m * m * std::log(1.0 / (1.0 - (n - 1.0) / sup2)) - 2.0 * m * n;
  return r;
}

struct HarmonicEstimate {
  double sum = 0.0;     // H(x)
  double approx = 0.0;  // log x + gamma
  double error = 0.0;   // |sum - approx|
};

inline constexpr double kEulerMascheroni = 0.57721566490153286060651209008240243;

inline HarmonicEstimate harmonic_estimate(std::uint64_t x) {
  if (x < 1) throw precondition_error("harmonic_estimate requires x >= 1");
  CompensatedSum<double> acc;
  for (std::uint64_t n = 1; n <= x; ++n) acc.add(1.0 / static_cast<double>(n));
  HarmonicEstimate h;
  h.sum = acc.value();
  h.approx = std::log(static_cast<double>(x)) + kEulerMascheroni;
  h.error = std::abs(h.sum - h.approx);
  return h;
}

}  // namespace heilbronn
