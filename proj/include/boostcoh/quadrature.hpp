#pragma once

#include <functional>
#include <optional>

namespace boostcoh {

/// Tolerances and limits for the adaptive Gauss-Kronrod integrator.
struct QuadratureSpec {
  double relative_tolerance = 1e-12;
  double absolute_tolerance = 1e-14;
  int max_subdivisions = 2000;
  /// Infinite limits are cut at this many widths when the caller supplies a scale.
  double truncation_multiplier = 12.0;

  /// Throws DomainError when an invariant is violated.
  void validate() const;
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions_used = 0;
};

using Integrand = std::function<double(double)>;

/// Adaptive 21-point Gauss-Kronrod quadrature with global bisection.
///
/// Limits may be +/-infinity. With a `gaussian_scale` the infinite ends are
/// truncated at truncation_multiplier * scale from the origin; without one
/// the half-line or line is mapped onto a finite interval.
///
/// Throws NonConvergenceError (carrying the best estimate) when the
/// tolerance is not reached within max_subdivisions, and EvaluationError
/// when f produces a non-finite value.
IntegralResult integrate(const Integrand& f, double lower, double upper,
                         const QuadratureSpec& spec = {},
                         std::optional<double> gaussian_scale = std::nullopt);

}  // namespace boostcoh
