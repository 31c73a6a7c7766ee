#pragma once

#include <stdexcept>
#include <string>

namespace nearfac {

// Bad input: invalid element code, malformed descriptor, parameter mismatch.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The operation is not defined for this group family or exceeds the
// supported size.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition on the argument does not hold (e.g. an NF that
// is required to be symmetric is not).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematically guaranteed result was not obtained. Seeing this means a
// bug in the library, never bad user input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nearfac
