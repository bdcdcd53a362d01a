#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monosys {

/// Bad sizes: mismatched vector/matrix dimensions, zero-dimensional inputs.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A type invariant was violated at construction (bad constants, empty
/// intervals, asymmetric input, parameter outside its box, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// lambda is not strictly inside the admissible interval for the regime,
/// so the assembled operator would not be strongly monotone.
class InadmissibleLambdaError : public std::domain_error {
 public:
  InadmissibleLambdaError(std::string message, double lambda, double lower, double upper)
      : std::domain_error(std::move(message)), lambda(lambda), lower(lower), upper(upper) {}

  double lambda;
  double lower;  // open endpoints of the admissible interval
  double upper;
};

/// The iteration hit the iteration cap before meeting the residual tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(std::string message, double last_residual, std::size_t iterations)
      : std::runtime_error(std::move(message)),
        last_residual(last_residual),
        iterations(iterations) {}

  double last_residual;
  std::size_t iterations;
};

/// NaN/Inf showed up in the iterates; names the offending iteration.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(std::string message, std::size_t iteration)
      : std::runtime_error(std::move(message)), iteration(iteration) {}

  std::size_t iteration;
};

/// A member solve of a parameter-dependence study failed; carries the
/// 1-based index of the failing sequence member.
class StudyMemberError : public std::runtime_error {
 public:
  StudyMemberError(std::string message, std::size_t index)
      : std::runtime_error(std::move(message)), index(index) {}

  std::size_t index;
};

}  // namespace monosys
