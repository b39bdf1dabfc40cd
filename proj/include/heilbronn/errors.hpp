#pragma once

#include <stdexcept>
#include <string>

namespace heilbronn {

// Tuple violates the compression domain (zero or duplicate coordinate, n < 2).
struct invalid_tuple_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct dimension_mismatch_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Scale outside (0, 1].
struct scale_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Logarithm argument non-positive in a bound formula.
struct bound_domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

struct degenerate_ball_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Requested circle placement cannot keep the source and its image antipodal.
struct placement_conflict_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct degenerate_configuration_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Incremental objective cache disagrees with a full recomputation.
struct cache_inconsistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace heilbronn
