#pragma once

#include <stdexcept>
#include <string>

namespace boostcoh {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid sweep configuration, detected before any computation runs.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Base class for numerical failures during evaluation.
class ComputationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Adaptive integration exhausted its subdivision budget.
class NonConvergenceError : public ComputationError {
public:
  NonConvergenceError(const std::string& what, double best_estimate, double error_estimate)
      : ComputationError(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

private:
  double best_estimate_;
  double error_estimate_;
};

/// The integrand returned NaN or Inf.
class EvaluationError : public ComputationError {
public:
  EvaluationError(const std::string& what, double abscissa)
      : ComputationError(what), abscissa_(abscissa) {}

  double abscissa() const noexcept { return abscissa_; }

private:
  double abscissa_;
};

}  // namespace boostcoh
