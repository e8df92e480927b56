#pragma once

#include <stdexcept>

namespace qsrg {

// Raised when an input is structurally outside the supported range
// (group order, search degree, ...).  The CLI maps this to exit code 3.
struct bound_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised for malformed textual input: group specs, subgroup specs,
// table files, edge lists.  The CLI maps this to exit code 2.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an edge-transitive instance fails the elementary-abelian
// quotient consequence.  This cannot happen for a correct build, so it is
// kept separate from ordinary certification failures.
struct corollary_violation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace qsrg
