#ifndef LVR_ERRORS_HPP
#define LVR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lvr {

// Error taxonomy used across the library.  All inherit from lvr::Error so the
// CLI can map any library failure to a single exit status.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument values (wrong degree, index out of range, p < 2, ...).
struct DomainError : Error {
  using Error::Error;
};

// A configured resource cap was exceeded (k!, pairing count, ...).
struct CapError : Error {
  using Error::Error;
};

// Linear system or evaluation point is singular (e.g. Weingarten at N < k).
struct SingularError : Error {
  using Error::Error;
};

// An iterative or series evaluation failed to converge (guard radius,
// Newton stall, quadrature refinement).
struct ConvergenceError : Error {
  using Error::Error;
};

}  // namespace lvr

#endif
