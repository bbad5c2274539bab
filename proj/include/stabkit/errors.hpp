#pragma once

#include <stdexcept>
#include <string>

namespace stabkit {

/// Base of every library error. The CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatch, schema violation, unparsable number.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (e.g. H not ample, delta <= 0).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search exceeded its configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// A certificate could not be produced (unknown provider value, no epsilon found).
class CertificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace stabkit
