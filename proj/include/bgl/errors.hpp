#pragma once

#include <stdexcept>
#include <string>

namespace bgl {

// Error taxonomy shared by all modules. The CLI maps these onto exit codes:
// DomainError -> 2, ResourceError and PrecisionError -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on mathematical inputs was violated (p not an odd prime,
// alpha out of range, empty scan window, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured budget was exceeded (sieve cap, pair-count cap, file I/O).
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A guaranteed-precision evaluation could not be decided at the working
// precision (floor/threshold landed inside the safety margin). Callers may
// retry with more precision bits.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Invariant breakage inside the library itself; never expected on valid input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bgl
