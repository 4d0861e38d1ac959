#pragma once

#include <optional>
#include <span>

#include "boostcoh/density.hpp"
#include "boostcoh/lorentz.hpp"

namespace boostcoh {

enum class Method { closed_form, quadrature };

/// Width-to-mass ratio above which the perturbative closed forms are
/// reported as extrapolations.
inline constexpr double kExtrapolationThreshold = 0.3;

struct ParamsEcho {
  int n = 0;
  double beta = 0.0;
  double sigma = 0.0;
  double mass = 0.0;
};

struct CoherenceResult {
  double value = 1.0;
  Method method = Method::closed_form;
  ParamsEcho params;
  bool extrapolated = false;
};

/// sqrt(d/(d-1) sum_i (lambda_i - 1/d)^2). Requires d >= 2, one eigenvalue
/// per dimension, entries in [0, 1] and unit sum within 1e-10.
double frobenius_coherence(std::span<const double> eigenvalues, int d);

/// Frobenius coherence of a 2x2 spin state.
double cf_from_density(const SpinDensityMatrix& rho);

/// (2n + 1) / 4: the coefficient of ((b-1)/(b+1)) (sigma/m)^2 in the 1+1 loss.
double loss_coefficient_1p1(int n);

/// (2n + 3)/6 [1 - 2/(2n + 3) (Gamma(n+2)/Gamma(n+3/2))^2]: the 3+1 analogue.
double loss_coefficient_3p1(int n);

/// Perturbative off-diagonal deficit F = (2n+1)/8 k (sigma/m)^2 with k = (b-1)/(b+1).
double deficit_f_1p1(int n, const Boost& boost, double sigma, double m);

/// Perturbative population transfer G = (2n+3)/12 k (sigma/m)^2.
double transfer_g_3p1(int n, const Boost& boost, double sigma, double m);

/// Perturbative coherence amplitude
/// H = sqrt(k)/(2 sqrt 3) Gamma(n+2)/Gamma(n+3/2) (sigma/m) - (2n+3)/24 k (sigma/m)^2.
double amplitude_h_3p1(int n, const Boost& boost, double sigma, double m);

/// [[1/2, 1/2 - F], [1/2 - F, 1/2]].
SpinDensityMatrix perturbative_rho_1p1(int n, const Boost& boost, double sigma, double m);

/// [[1 - G, -(1 - i) H], [-(1 + i) H, G]].
SpinDensityMatrix perturbative_rho_3p1(int n, const Boost& boost, double sigma, double m);

/// 1 - (2n+1)/4 k (sigma/m)^2.
///
/// Requires sigma < m unless `allow_beyond_mass` is set; results with
/// sigma/m above kExtrapolationThreshold are flagged. Negative values are
/// returned unclamped.
CoherenceResult cf_closed_1p1(int n, const Boost& boost, double sigma, double m,
                              bool allow_beyond_mass = false);

/// 1 - loss_coefficient_3p1(n) k (sigma/m)^2, with the same validity rules as cf_closed_1p1.
CoherenceResult cf_closed_3p1(int n, const Boost& boost, double sigma, double m,
                              bool allow_beyond_mass = false);

/// Exact coherence by quadrature over the momentum distribution.
CoherenceResult cf_quadrature_1p1(int n, const Boost& boost, double sigma, double m,
                                  const QuadratureSpec& spec = {});
CoherenceResult cf_quadrature_3p1(int n, const Boost& boost, double sigma, double m,
                                  const QuadratureSpec& spec = {});

/// Largest n keeping the beta -> 1 closed form non-negative: 2 (m/sigma)^2 - 1/2.
double n_bound_ultrarelativistic(double sigma, double m);

/// The n at which the 1+1 closed form reaches zero for this boost.
/// Returns nullopt (no finite bound) at zero boost.
std::optional<double> n_bound_at_beta(double sigma, double m, const Boost& boost);

}  // namespace boostcoh
