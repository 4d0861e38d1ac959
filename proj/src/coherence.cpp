#include "boostcoh/coherence.hpp"

#include <cmath>
#include <numeric>

#include "boostcoh/errors.hpp"
#include "boostcoh/wavepacket.hpp"

namespace boostcoh {

namespace {

constexpr double kSpectrumTolerance = 1e-10;

void check_scales(double sigma, double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("mass must be positive and finite");
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw DomainError("width sigma must be positive and finite");
}

void check_n(int n) {
  if (n < 0) throw DomainError("wave packet exponent n must be non-negative");
}

void check_closed_form_regime(double sigma, double m, bool allow_beyond_mass) {
  check_scales(sigma, m);
  if (sigma >= m && !allow_beyond_mass)
    throw DomainError("closed form requires sigma < m");
}

// Gamma(n+2) / Gamma(n+3/2)
double radial_gamma_ratio(int n) { return half_integer_gamma_ratio(2 * n + 4, 2 * n + 3); }

CoherenceResult make_result(double value, Method method, int n, const Boost& boost, double sigma,
                            double m) {
  return {value, method, {n, boost.beta(), sigma, m}, sigma / m > kExtrapolationThreshold};
}

}  // namespace

double frobenius_coherence(std::span<const double> eigenvalues, int d) {
  if (d < 2) throw DomainError("Hilbert space dimension must be at least 2");
  if (eigenvalues.size() != static_cast<std::size_t>(d))
    throw DomainError("expected one eigenvalue per Hilbert space dimension");
  for (double lambda : eigenvalues) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("eigenvalues must lie in [0, 1]");
  }
  const double total = std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0);
  if (std::abs(total - 1.0) > kSpectrumTolerance)
    throw DomainError("eigenvalues must sum to one");

  const double uniform = 1.0 / d;
  double sum = 0.0;
  for (double lambda : eigenvalues) sum += (lambda - uniform) * (lambda - uniform);
  return std::sqrt(static_cast<double>(d) / (d - 1) * sum);
}

double cf_from_density(const SpinDensityMatrix& rho) {
  const auto spectrum = eigenvalues(rho);
  const double values[] = {spectrum.lambda_plus, spectrum.lambda_minus};
  return frobenius_coherence(values, 2);
}

double loss_coefficient_1p1(int n) {
  check_n(n);
  return (2.0 * n + 1.0) / 4.0;
}

double loss_coefficient_3p1(int n) {
  check_n(n);
  const double ratio = radial_gamma_ratio(n);
  const double twice = 2.0 * n + 3.0;
  return twice / 6.0 * (1.0 - 2.0 / twice * ratio * ratio);
}

double deficit_f_1p1(int n, const Boost& boost, double sigma, double m) {
  check_n(n);
  check_scales(sigma, m);
  const double s = sigma / m;
  return (2.0 * n + 1.0) / 8.0 * boost.contraction() * s * s;
}

double transfer_g_3p1(int n, const Boost& boost, double sigma, double m) {
  check_n(n);
  check_scales(sigma, m);
  const double s = sigma / m;
  return (2.0 * n + 3.0) / 12.0 * boost.contraction() * s * s;
}

double amplitude_h_3p1(int n, const Boost& boost, double sigma, double m) {
  check_n(n);
  check_scales(sigma, m);
  const double s = sigma / m;
  const double k = boost.contraction();
  return std::sqrt(k) / (2.0 * std::sqrt(3.0)) * radial_gamma_ratio(n) * s -
         (2.0 * n + 3.0) / 24.0 * k * s * s;
}

SpinDensityMatrix perturbative_rho_1p1(int n, const Boost& boost, double sigma, double m) {
  const double f = deficit_f_1p1(n, boost, sigma, m);
  return {0.5, 0.5, {0.5 - f, 0.0}};
}

SpinDensityMatrix perturbative_rho_3p1(int n, const Boost& boost, double sigma, double m) {
  const double g = transfer_g_3p1(n, boost, sigma, m);
  const double h = amplitude_h_3p1(n, boost, sigma, m);
  return {1.0 - g, g, -std::complex<double>(1.0, -1.0) * h};
}

CoherenceResult cf_closed_1p1(int n, const Boost& boost, double sigma, double m,
                              bool allow_beyond_mass) {
  check_n(n);
  check_closed_form_regime(sigma, m, allow_beyond_mass);
  const double s = sigma / m;
  const double value = 1.0 - loss_coefficient_1p1(n) * boost.contraction() * s * s;
  return make_result(value, Method::closed_form, n, boost, sigma, m);
}

CoherenceResult cf_closed_3p1(int n, const Boost& boost, double sigma, double m,
                              bool allow_beyond_mass) {
  check_n(n);
  check_closed_form_regime(sigma, m, allow_beyond_mass);
  const double s = sigma / m;
  const double value = 1.0 - loss_coefficient_3p1(n) * boost.contraction() * s * s;
  return make_result(value, Method::closed_form, n, boost, sigma, m);
}

CoherenceResult cf_quadrature_1p1(int n, const Boost& boost, double sigma, double m,
                                  const QuadratureSpec& spec) {
  const auto rho = boosted_rho_1p1(WavePacket1D(n, sigma), boost, m, spec);
  return make_result(cf_from_density(rho), Method::quadrature, n, boost, sigma, m);
}

CoherenceResult cf_quadrature_3p1(int n, const Boost& boost, double sigma, double m,
                                  const QuadratureSpec& spec) {
  const auto rho = boosted_rho_3p1(WavePacket3D(n, sigma), boost, m, spec);
  return make_result(cf_from_density(rho), Method::quadrature, n, boost, sigma, m);
}

double n_bound_ultrarelativistic(double sigma, double m) {
  check_scales(sigma, m);
  const double r = m / sigma;
  return 2.0 * r * r - 0.5;
}

std::optional<double> n_bound_at_beta(double sigma, double m, const Boost& boost) {
  check_scales(sigma, m);
  const double k = boost.contraction();
  if (k == 0.0) return std::nullopt;
  const double r = m / sigma;
  return 0.5 * (4.0 / k * r * r - 1.0);
}

}  // namespace boostcoh
