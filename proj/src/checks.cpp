#include "boostcoh/checks.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "boostcoh/coherence.hpp"
#include "boostcoh/density.hpp"
#include "boostcoh/lorentz.hpp"

namespace boostcoh {

namespace {

template <typename Body>
CheckOutcome run_check(std::string name, Body body) {
  CheckOutcome outcome{std::move(name), false, {}};
  try {
    std::ostringstream detail;
    outcome.passed = body(detail);
    outcome.detail = detail.str();
  } catch (const std::exception& e) {
    outcome.detail = std::string("threw: ") + e.what();
  }
  return outcome;
}

}  // namespace

std::vector<CheckOutcome> run_fast_checks() {
  std::vector<CheckOutcome> out;

  out.push_back(run_check("zero boost keeps full coherence", [](std::ostream& d) {
    const Boost rest = boost_from_beta(0.0);
    double worst = 0.0;
    for (int n = 0; n <= 2; ++n) {
      for (double s : {0.01, 0.1, 0.5}) {
        worst = std::max(worst, std::abs(cf_closed_1p1(n, rest, s, 1.0).value - 1.0));
        worst = std::max(worst, std::abs(cf_closed_3p1(n, rest, s, 1.0).value - 1.0));
        worst = std::max(worst, std::abs(cf_quadrature_1p1(n, rest, s, 1.0).value - 1.0));
        worst = std::max(worst, std::abs(cf_quadrature_3p1(n, rest, s, 1.0).value - 1.0));
      }
    }
    d << "max |C_F - 1| = " << worst;
    return worst <= 1e-10;
  }));

  out.push_back(run_check("little-group unitarity", [](std::ostream& d) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> beta(0.0, 0.999), ratio(-5.0, 5.0), mass(0.1, 1000.0);
    double worst_1p1 = 0.0, worst_3p1 = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const Boost boost = boost_from_beta(beta(rng));
      const double m = mass(rng);
      const double p = ratio(rng) * m;
      const auto ab = little_group_1p1(boost, p, m);
      worst_1p1 = std::max(worst_1p1, std::abs(ab.A * ab.A + ab.B * ab.B - 2.0));
      const auto f = little_group_3p1(boost, std::abs(p), m);
      const double lhs = f.M * f.M + f.N * f.N * 2.0 * p * p / 3.0;
      worst_3p1 = std::max(worst_3p1, std::abs(lhs - f.I * f.J) / (f.I * f.J));
    }
    d << "max |A^2+B^2-2| = " << worst_1p1 << ", max rel |M^2+N^2 p_T^2 - IJ| = " << worst_3p1;
    return worst_1p1 <= 1e-12 && worst_3p1 <= 1e-10;
  }));

  out.push_back(run_check("boosted states have unit trace and are positive", [](std::ostream& d) {
    int bad = 0, total = 0;
    for (int n = 0; n <= 2; ++n)
      for (double beta : {0.3, 0.99})
        for (double s : {0.01, 0.1}) {
          const Boost boost = boost_from_beta(beta);
          bad += !boosted_rho_1p1(WavePacket1D(n, s), boost, 1.0).is_valid();
          bad += !boosted_rho_3p1(WavePacket3D(n, s), boost, 1.0).is_valid();
          total += 2;
        }
    d << bad << " of " << total << " states invalid";
    return bad == 0;
  }));

  out.push_back(run_check("quadrature matches closed form at small width", [](std::ostream& d) {
    const Boost boost = boost_from_beta(0.8);
    const double s = 0.01;
    double worst_1p1 = 0.0, worst_3p1 = 0.0;
    for (int n = 0; n <= 2; ++n) {
      worst_1p1 = std::max(worst_1p1, std::abs(cf_quadrature_1p1(n, boost, s, 1.0).value -
                                               cf_closed_1p1(n, boost, s, 1.0).value));
      worst_3p1 = std::max(worst_3p1, std::abs(cf_quadrature_3p1(n, boost, s, 1.0).value -
                                               cf_closed_3p1(n, boost, s, 1.0).value));
    }
    d << "1+1 max diff " << worst_1p1 << ", 3+1 max diff " << worst_3p1;
    return worst_1p1 <= 10 * std::pow(s, 4) && worst_3p1 <= 10 * std::pow(s, 3);
  }));

  out.push_back(run_check("n bound for the electron at beta 0.99", [](std::ostream& d) {
    const auto bound = n_bound_at_beta(0.49, 0.5, boost_from_beta(0.99));
    d << "n < " << (bound ? *bound : INFINITY);
    return bound && std::abs(*bound - 2.27) <= 0.01;
  }));

  return out;
}

}  // namespace boostcoh
