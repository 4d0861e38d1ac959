#pragma once

namespace boostcoh {

/// Gamma(k / 2) for a positive integer k, by exact recurrence from
/// Gamma(1/2) = sqrt(pi) and Gamma(1) = 1.
double half_integer_gamma(int twice_argument);

/// Gamma(a) / Gamma(b) for positive half-integers a = twice_a / 2 and b = twice_b / 2.
/// Uses a finite product when a - b is an integer; otherwise a ratio of
/// exact values, falling back to lgamma once those overflow.
double half_integer_gamma_ratio(int twice_a, int twice_b);

/// Normalized generalized Gaussian f(p) = p^n exp(-p^2 / 2 sigma^2) / sqrt(sigma^(2n+1) Gamma(n+1/2)).
struct WavePacket1D {
  int n = 0;
  double sigma = 1.0;  // MeV

  WavePacket1D() = default;
  WavePacket1D(int n, double sigma);
};

/// Radial 3D packet phi(p) = |p|^n exp(-p^2 / 2 sigma^2) / sqrt(2 pi sigma^(2n+3) Gamma(n+3/2)).
struct WavePacket3D {
  int n = 0;
  double sigma = 1.0;  // MeV

  WavePacket3D() = default;
  WavePacket3D(int n, double sigma);
};

double eval_1d(const WavePacket1D& packet, double p);

/// Throws DomainError for p < 0.
double eval_3d(const WavePacket3D& packet, double p);

/// Probability density |f(p)|^2 on the line.
double density_1d(const WavePacket1D& packet, double p);

/// Radial probability density 4 pi p^2 |phi(p)|^2; integrates to one on [0, inf).
double radial_density_3d(const WavePacket3D& packet, double p);

/// Integral of p^k |f(p)|^2 over the line.
double moment_1d(const WavePacket1D& packet, int k);

/// 4 pi times the integral of p^(k+2) |phi(p)|^2 over the half-line.
double moment_3d(const WavePacket3D& packet, int k);

}  // namespace boostcoh
