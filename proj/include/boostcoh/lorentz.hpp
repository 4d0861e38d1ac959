#pragma once

#include <array>

namespace boostcoh {

using Vec3 = std::array<double, 3>;

/// Observer boost. Holds beta, the rapidity alpha and its cached
/// hyperbolic functions a = sinh(alpha), b = cosh(alpha) = gamma.
class Boost {
public:
  /// The rest frame.
  Boost() = default;

  double beta() const noexcept { return beta_; }
  double alpha() const noexcept { return alpha_; }
  double sinh_alpha() const noexcept { return a_; }
  double cosh_alpha() const noexcept { return b_; }
  double cosh_half() const noexcept { return cosh_half_; }
  double sinh_half() const noexcept { return sinh_half_; }

  /// (cosh alpha - 1) / (cosh alpha + 1), the factor that governs every
  /// coherence correction. Evaluated as tanh^2(alpha/2) to avoid cancellation.
  double contraction() const noexcept;

  friend Boost boost_from_beta(double beta);
  friend Boost boost_from_rapidity(double alpha);

private:
  double beta_ = 0.0;
  double alpha_ = 0.0;
  double a_ = 0.0;
  double b_ = 1.0;
  double cosh_half_ = 1.0;
  double sinh_half_ = 0.0;
};

/// Throws DomainError unless 0 <= beta < 1.
Boost boost_from_beta(double beta);

/// Throws DomainError unless alpha >= 0 and finite.
Boost boost_from_rapidity(double alpha);

/// Half-angle form of a Wigner rotation: D = cos(phi/2) 1 + i sin(phi/2) (n . Sigma).
struct WignerAngle {
  double cos_half = 1.0;
  Vec3 sin_half_axis{0.0, 0.0, 0.0};
};

/// Wigner rotation for a boost along `e_hat` acting on a particle of
/// rapidity `zeta` moving along `f_hat`. Both directions must be unit
/// vectors to 1e-12.
WignerAngle wigner_angle_general(const Boost& boost, double zeta, const Vec3& e_hat,
                                 const Vec3& f_hat);

/// Coefficients A = cos(phi/2) + sin(phi/2) and B = cos(phi/2) - sin(phi/2)
/// of the boosted equal superposition, for motion along x and a boost along z.
struct LittleGroup1p1 {
  double A = 1.0;
  double B = 1.0;
};

/// Evaluates the half-angle formulas with sinh(zeta) = p / m. Throws DomainError for m <= 0.
LittleGroup1p1 little_group_1p1(const Boost& boost, double p, double m);

/// A^2 - 1 = a (p/m) / (1 + b sqrt(1 + (p/m)^2)).
double a_squared_excess_1p1(const Boost& boost, double p, double m);

/// A B - 1 = -(b - 1)(sqrt(1 + (p/m)^2) - 1) / (1 + b sqrt(1 + (p/m)^2)).
/// Equal to (b + p0/m) / (1 + b p0/m) - 1 but free of cancellation at small p/m.
double ab_product_excess_1p1(const Boost& boost, double p, double m);

/// Little-group factors for a boost along z, with the momentum direction
/// fixed to p_x = p_y = p_z = p / sqrt(3).
struct LittleGroupFactors3D {
  double I = 0.0;  // p0 + m
  double J = 0.0;  // p0 cosh(alpha) + p_z sinh(alpha) + m
  double M = 0.0;  // (p0 + m) cosh(alpha/2) + p_z sinh(alpha/2)
  double N = 0.0;  // sinh(alpha/2)
};

/// Throws DomainError for m <= 0 or p < 0.
LittleGroupFactors3D little_group_3p1(const Boost& boost, double p, double m);

struct RatioCombinations3D {
  double m2_over_ij = 1.0;       // M^2 / (I J)
  double n2_term = 0.0;          // N^2 (p_x^2 + p_y^2) / (I J)
  double cross_magnitude = 0.0;  // M N (p / sqrt 3) / (I J); the cross term is this times (1 -+ i)
};

RatioCombinations3D ratio_combinations_3p1(const LittleGroupFactors3D& factors, double p,
                                           double m);

}  // namespace boostcoh
