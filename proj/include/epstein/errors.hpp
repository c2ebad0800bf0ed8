#pragma once

#include <stdexcept>
#include <string>

namespace epstein {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Singular or malformed lattice matrix, or vectors of the wrong length.
class InvalidLatticeError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative method failed to converge within its iteration cap.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// Requested work exceeds a configured resource cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimensionError : public Error {
 public:
  using Error::Error;
};

/// A truncated reference sum cannot meet the requested tolerance.
class InsufficientRadiusError : public Error {
 public:
  using Error::Error;
};

}  // namespace epstein
