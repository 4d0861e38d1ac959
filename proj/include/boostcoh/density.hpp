#pragma once

#include <complex>

#include "boostcoh/lorentz.hpp"
#include "boostcoh/quadrature.hpp"
#include "boostcoh/wavepacket.hpp"

namespace boostcoh {

/// 2x2 Hermitian spin density matrix. Only the upper off-diagonal element
/// is stored; r21 is its conjugate.
struct SpinDensityMatrix {
  double r11 = 1.0;
  double r22 = 0.0;
  std::complex<double> r12{0.0, 0.0};

  std::complex<double> r21() const { return std::conj(r12); }
  double trace() const { return r11 + r22; }
  double determinant() const { return r11 * r22 - std::norm(r12); }

  /// Unit trace within 1e-10 and positivity up to quadrature noise.
  bool is_valid() const;
};

struct SpinSpectrum {
  double lambda_plus = 1.0;
  double lambda_minus = 0.0;
};

/// Closed-form eigenvalues in descending order. Values less than 1e-10
/// outside [0, 1] are clamped; anything further out throws ComputationError.
SpinSpectrum eigenvalues(const SpinDensityMatrix& rho);

/// Pointwise integrands of the 1+1 construction, each as a deviation from
/// the rest-frame value so that the small corrections are integrated
/// directly: A^2 - 1, B^2 - 1 and A B - 1.
struct Integrands1p1 {
  double a_squared_excess = 0.0;
  double b_squared_excess = 0.0;
  double ab_excess = 0.0;
};

Integrands1p1 integrands_1p1(const Boost& boost, double p, double m);

/// Pointwise integrands of the 3+1 construction at radial momentum p:
/// M^2/(IJ) - 1, N^2 (p_x^2 + p_y^2)/(IJ) and the real cross-term prefactor.
struct Integrands3p1 {
  double m2_excess = 0.0;
  double n2_term = 0.0;
  double cross_magnitude = 0.0;
};

Integrands3p1 integrands_3p1(const Boost& boost, double p, double m);

/// Spin state (|0> + |1>)/sqrt 2 seen by the boosted observer, traced over
/// the 1D momentum distribution. Throws DomainError for m <= 0 and
/// propagates quadrature failures.
SpinDensityMatrix boosted_rho_1p1(const WavePacket1D& packet, const Boost& boost, double m,
                                  const QuadratureSpec& spec = {});

/// Spin-up state seen by the boosted observer, traced over the radial
/// momentum distribution with the fixed-direction substitution.
SpinDensityMatrix boosted_rho_3p1(const WavePacket3D& packet, const Boost& boost, double m,
                                  const QuadratureSpec& spec = {});

}  // namespace boostcoh
