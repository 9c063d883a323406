#ifndef GFC_ERRORS_HPP
#define GFC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gfc {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input: a precondition or invariant named in the message was violated.
// The CLI maps these to exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Numerical failure of an otherwise well-posed computation.
// The CLI maps these to exit code 2.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Evaluating a series with a nonzero Dirac part as a pointwise function.
class EvalOfDistribution : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Termwise differentiation would leave the admissible function space.
class NotDifferentiable : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A projector value was requested for a function unbounded at t = 0.
class DivergentAtZero : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Leading series coefficient a_0 = 0 in an associated-kernel solve.
class DegenerateLeadingCoefficient : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A constructed kernel triple failed its convolution-identity check.
class TripleResidualTooLarge : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class IllConditioned : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularStep : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Imaginary parts of a should-be-real series failed to cancel.
class ComplexResidue : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace gfc

#endif  // GFC_ERRORS_HPP
