#pragma once

#include <stdexcept>
#include <string>

namespace sgb {

/// Base of every error raised by the library.
///
/// Errors split into two families: invalid input (ValidationError) and
/// numerical breakdown (NumericalError). The command-line tool maps the
/// first family to exit code 2 and the second to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

// Input outside the domain of a formula.
class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// S_sigma = 0: formulas dividing by sqrt(S) are undefined.
class DegenerateError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class StepError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotApplicable : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SizeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class GeometryError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class FitError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class OrientationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class IllConditionedError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DeflationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace sgb
