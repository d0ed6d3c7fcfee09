// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "traincap/types.hpp"

namespace traincap {

namespace detail {
/// Short %g rendering for error messages; to_string would flatten small
/// values to 0.000000.
inline std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}
}  // namespace detail

/// Base class for every error this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (matrix files, JSON). Carries a 1-based position
/// when one is known; 0 means the error is not tied to a location.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}

  ParseError(const std::string& msg, int line, int column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_ = 0;
  int column_ = 0;
};

/// A user-supplied matrix violates a structural requirement.
class InvalidMatrixError : public Error {
 public:
  using Error::Error;
};

class NotSquareError : public InvalidMatrixError {
 public:
  using InvalidMatrixError::InvalidMatrixError;
};

class AsymmetryError : public InvalidMatrixError {
 public:
  using InvalidMatrixError::InvalidMatrixError;
};

class NotPsdError : public InvalidMatrixError {
 public:
  using InvalidMatrixError::InvalidMatrixError;
};

/// A parameter combination outside an operation's domain.
class InvalidConfigError : public Error {
 public:
  using Error::Error;
};

class InvalidPlanError : public InvalidConfigError {
 public:
  using InvalidConfigError::InvalidConfigError;
};

class DimensionMismatchError : public InvalidConfigError {
 public:
  using InvalidConfigError::InvalidConfigError;
};

/// Numerical failure inside a matrix computation.
class NumericError : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefiniteError : public NumericError {
 public:
  NotPositiveDefiniteError(Index pivot_index, double pivot_value)
      : NumericError("matrix is not positive definite: pivot " +
                     std::to_string(pivot_index) + " evaluates to " +
                     detail::format_value(pivot_value)),
        pivot_index_(pivot_index),
        pivot_value_(pivot_value) {}

  Index pivot_index() const { return pivot_index_; }
  double pivot_value() const { return pivot_value_; }

 private:
  Index pivot_index_;
  double pivot_value_;
};

class ConvergenceError : public NumericError {
 public:
  explicit ConvergenceError(long iterations)
      : NumericError("eigendecomposition did not converge within " +
                     std::to_string(iterations) + " iterations"),
        iterations_(iterations) {}

  long iterations() const { return iterations_; }

 private:
  long iterations_;
};

}  // namespace traincap
