#include "boostcoh/lorentz.hpp"

#include <cmath>

#include "boostcoh/errors.hpp"

namespace boostcoh {

namespace {

constexpr double kUnitTolerance = 1e-12;

void check_mass(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("mass must be positive and finite");
}

double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

double dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

// sqrt(1 + x^2) - 1 without cancellation.
double energy_excess(double x) { return x * x / (1.0 + std::sqrt(1.0 + x * x)); }

}  // namespace

double Boost::contraction() const noexcept {
  const double t = std::tanh(0.5 * alpha_);
  return t * t;
}

Boost boost_from_beta(double beta) {
  if (!(beta >= 0.0 && beta < 1.0)) throw DomainError("beta must lie in [0, 1)");
  Boost boost;
  boost.beta_ = beta;
  boost.alpha_ = std::atanh(beta);
  boost.b_ = 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
  boost.a_ = beta * boost.b_;
  boost.cosh_half_ = std::cosh(0.5 * boost.alpha_);
  boost.sinh_half_ = std::sinh(0.5 * boost.alpha_);
  return boost;
}

Boost boost_from_rapidity(double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    throw DomainError("rapidity must be non-negative and finite");
  Boost boost;
  boost.alpha_ = alpha;
  boost.beta_ = std::tanh(alpha);
  boost.a_ = std::sinh(alpha);
  boost.b_ = std::cosh(alpha);
  boost.cosh_half_ = std::cosh(0.5 * alpha);
  boost.sinh_half_ = std::sinh(0.5 * alpha);
  return boost;
}

WignerAngle wigner_angle_general(const Boost& boost, double zeta, const Vec3& e_hat,
                                 const Vec3& f_hat) {
  if (std::abs(norm(e_hat) - 1.0) > kUnitTolerance || std::abs(norm(f_hat) - 1.0) > kUnitTolerance)
    throw DomainError("boost and momentum directions must be unit vectors");
  if (!std::isfinite(zeta)) throw DomainError("particle rapidity must be finite");

  const double alpha = boost.alpha();
  const double ef = dot(e_hat, f_hat);
  const double ch_a = std::cosh(0.5 * alpha), sh_a = std::sinh(0.5 * alpha);
  const double ch_z = std::cosh(0.5 * zeta), sh_z = std::sinh(0.5 * zeta);

  const double denom = std::sqrt(0.5 + 0.5 * std::cosh(alpha) * std::cosh(zeta) +
                                 0.5 * std::sinh(alpha) * std::sinh(zeta) * ef);
  WignerAngle w;
  w.cos_half = (ch_a * ch_z + sh_a * sh_z * ef) / denom;
  const Vec3 axis = cross(e_hat, f_hat);
  const double s = sh_a * sh_z / denom;
  w.sin_half_axis = {s * axis[0], s * axis[1], s * axis[2]};
  return w;
}

LittleGroup1p1 little_group_1p1(const Boost& boost, double p, double m) {
  check_mass(m);
  const double x = p / m;
  const double cosh_zeta = std::sqrt(1.0 + x * x);
  // cosh(zeta/2), sinh(zeta/2) from the half-angle identities; sinh carries the sign of p.
  const double ch_z = std::sqrt(0.5 * (cosh_zeta + 1.0));
  const double sh_z = std::copysign(std::sqrt(0.5 * energy_excess(x)), x);
  const double denom = std::sqrt(0.5 + 0.5 * boost.cosh_alpha() * cosh_zeta);
  const double c = boost.cosh_half() * ch_z / denom;
  const double s = boost.sinh_half() * sh_z / denom;
  return {c + s, c - s};
}

double a_squared_excess_1p1(const Boost& boost, double p, double m) {
  check_mass(m);
  const double x = p / m;
  return boost.sinh_alpha() * x / (1.0 + boost.cosh_alpha() * std::sqrt(1.0 + x * x));
}

double ab_product_excess_1p1(const Boost& boost, double p, double m) {
  check_mass(m);
  const double x = p / m;
  const double b = boost.cosh_alpha();
  // b - 1 evaluated as 2 sinh^2(alpha/2) to keep relative accuracy at small boosts.
  const double b_minus_1 = 2.0 * boost.sinh_half() * boost.sinh_half();
  return -b_minus_1 * energy_excess(x) / (1.0 + b * std::sqrt(1.0 + x * x));
}

LittleGroupFactors3D little_group_3p1(const Boost& boost, double p, double m) {
  check_mass(m);
  if (!(p >= 0.0)) throw DomainError("radial momentum must be non-negative");
  const double p0 = std::sqrt(p * p + m * m);
  const double pz = p / std::sqrt(3.0);
  LittleGroupFactors3D f;
  f.I = p0 + m;
  f.J = p0 * boost.cosh_alpha() + pz * boost.sinh_alpha() + m;
  f.M = (p0 + m) * boost.cosh_half() + pz * boost.sinh_half();
  f.N = boost.sinh_half();
  return f;
}

RatioCombinations3D ratio_combinations_3p1(const LittleGroupFactors3D& factors, double p,
                                           double m) {
  check_mass(m);
  const double ij = factors.I * factors.J;
  const double transverse2 = 2.0 * p * p / 3.0;  // p_x^2 + p_y^2
  RatioCombinations3D r;
  r.m2_over_ij = factors.M * factors.M / ij;
  r.n2_term = factors.N * factors.N * transverse2 / ij;
  r.cross_magnitude = factors.M * factors.N * (p / std::sqrt(3.0)) / ij;
  return r;
}

}  // namespace boostcoh
