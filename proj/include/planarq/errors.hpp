#pragma once

#include <stdexcept>
#include <string>

namespace planarq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotOddPrime : public Error {
 public:
  using Error::Error;
};

/// An enumeration-based operation would exceed the configured size bound.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different fields.
class LevelMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidModulus : public Error {
 public:
  using Error::Error;
};

class NotOnLocus : public Error {
 public:
  using Error::Error;
};

class SquareRootUnavailable : public Error {
 public:
  using Error::Error;
};

/// Raised when a value that must lie in F_q does not; indicates a bug.
class CoefficientNotInSubfield : public Error {
 public:
  using Error::Error;
};

class ValidationFailed : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace planarq
