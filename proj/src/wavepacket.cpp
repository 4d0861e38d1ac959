#include "boostcoh/wavepacket.hpp"

#include <cmath>
#include <numbers>

#include "boostcoh/errors.hpp"

namespace boostcoh {

namespace {

void check_packet(int n, double sigma) {
  if (n < 0) throw DomainError("wave packet exponent n must be non-negative");
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw DomainError("wave packet width sigma must be positive and finite");
}

double half_integer_lgamma(int twice_argument) {
  return std::lgamma(0.5 * twice_argument);
}

}  // namespace

double half_integer_gamma(int twice_argument) {
  if (twice_argument < 1) throw DomainError("gamma argument must be a positive half-integer");
  double value;
  int k;  // current twice-argument
  if (twice_argument % 2 == 0) {
    value = 1.0;
    k = 2;
  } else {
    value = std::sqrt(std::numbers::pi);
    k = 1;
  }
  for (; k < twice_argument; k += 2) value *= 0.5 * k;
  return value;
}

double half_integer_gamma_ratio(int twice_a, int twice_b) {
  if (twice_a < 1 || twice_b < 1)
    throw DomainError("gamma arguments must be positive half-integers");
  if ((twice_a - twice_b) % 2 == 0) {
    double ratio = 1.0;
    for (int k = twice_b; k < twice_a; k += 2) ratio *= 0.5 * k;
    for (int k = twice_a; k < twice_b; k += 2) ratio /= 0.5 * k;
    return ratio;
  }
  const double num = half_integer_gamma(twice_a);
  const double den = half_integer_gamma(twice_b);
  if (std::isfinite(num) && std::isfinite(den)) return num / den;
  return std::exp(half_integer_lgamma(twice_a) - half_integer_lgamma(twice_b));
}

WavePacket1D::WavePacket1D(int n_, double sigma_) : n(n_), sigma(sigma_) { check_packet(n, sigma); }

WavePacket3D::WavePacket3D(int n_, double sigma_) : n(n_), sigma(sigma_) { check_packet(n, sigma); }

double eval_1d(const WavePacket1D& packet, double p) {
  const double norm2 =
      std::pow(packet.sigma, 2 * packet.n + 1) * half_integer_gamma(2 * packet.n + 1);
  const double u = p / packet.sigma;
  return std::pow(p, packet.n) * std::exp(-0.5 * u * u) / std::sqrt(norm2);
}

double eval_3d(const WavePacket3D& packet, double p) {
  if (p < 0.0) throw DomainError("radial momentum must be non-negative");
  const double norm2 = 2.0 * std::numbers::pi * std::pow(packet.sigma, 2 * packet.n + 3) *
                       half_integer_gamma(2 * packet.n + 3);
  const double u = p / packet.sigma;
  return std::pow(p, packet.n) * std::exp(-0.5 * u * u) / std::sqrt(norm2);
}

double density_1d(const WavePacket1D& packet, double p) {
  const double f = eval_1d(packet, p);
  return f * f;
}

double radial_density_3d(const WavePacket3D& packet, double p) {
  const double phi = eval_3d(packet, p);
  return 4.0 * std::numbers::pi * p * p * phi * phi;
}

double moment_1d(const WavePacket1D& packet, int k) {
  if (k < 0) throw DomainError("moment order must be non-negative");
  if (k % 2 == 1) return 0.0;
  // sigma^k Gamma(n + (k+1)/2) / Gamma(n + 1/2)
  return std::pow(packet.sigma, k) *
         half_integer_gamma_ratio(2 * packet.n + k + 1, 2 * packet.n + 1);
}

double moment_3d(const WavePacket3D& packet, int k) {
  if (k < 0) throw DomainError("moment order must be non-negative");
  // sigma^k Gamma(n + (k+3)/2) / Gamma(n + 3/2)
  return std::pow(packet.sigma, k) *
         half_integer_gamma_ratio(2 * packet.n + k + 3, 2 * packet.n + 3);
}

}  // namespace boostcoh
