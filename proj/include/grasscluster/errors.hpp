#pragma once

#include <stdexcept>
#include <string>

namespace gcl {

// Bad dimensions or parameter ranges (a >= n, non-square matrix, ...).
struct parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Out-of-range, duplicate or otherwise malformed index sets.
struct index_error : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// A value hit a locus where the requested operation is undefined
// (vanishing minor, zero cluster variable, mutation at a frozen vertex).
struct degenerate_error : std::domain_error {
  using std::domain_error::domain_error;
};

// A structural precondition of a combinatorial move failed.
struct move_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Two redundant computations of the same quantity disagreed.  Always a bug.
struct internal_check_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Work would exceed a configured cap.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gcl
