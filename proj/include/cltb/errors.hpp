#pragma once

#include <stdexcept>
#include <string>

namespace cltb {

// Parameter outside the admissible set (p not in (0,1), delta > 1, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Inputs that are well formed on their own but do not fit together,
// e.g. lattices with incommensurable steps.
struct StructuralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A constant was requested for a (delta, s, regime) combination that
// is not tabulated.
struct LookupError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Quadrature, root finding or a series failed to converge.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad command line, unknown suite or table id, malformed spec file.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace cltb
