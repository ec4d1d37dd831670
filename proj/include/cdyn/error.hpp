#pragma once

#include <stdexcept>
#include <string>

namespace cdyn {

// Base of every error raised by the library. The CLI maps these onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes, group membership, missing keys: the inputs do not fit together.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation is violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// NaN/Inf or a numerical procedure that failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Truncation window too small for the requested bandwidths or sums.
class WindowError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain (e.g. |z| != 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace cdyn
