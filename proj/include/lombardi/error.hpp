#pragma once

#include <stdexcept>
#include <string>

namespace lombardi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coincident or otherwise degenerate geometric input.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// Malformed graph text or inconsistent adjacency.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input outside the class of graphs the tool can draw.
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

/// Rotation system fails the Euler check.
class NonplanarRotation : public Error {
 public:
  using Error::Error;
};

/// Iterative relaxation stopped before reaching its tolerance.
class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// An internal consistency check failed (e.g. a packing or drawing that
/// should be valid is not).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lombardi
