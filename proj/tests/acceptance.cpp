// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>

#include "boostcoh/coherence.hpp"
#include "boostcoh/density.hpp"
#include "boostcoh/lorentz.hpp"
#include "boostcoh/sweep.hpp"
#include "boostcoh/wavepacket.hpp"

using namespace boostcoh;

namespace {

struct Verdict {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

bool run_criterion(int id, const char* title, double time_limit_s, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.fail(std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0 && elapsed >= time_limit_s) v.fail(fmt("runtime %.2f s exceeds %.0f s", elapsed, time_limit_s));
  std::printf("%s [%d] %s (%.3f s)%s%s\n", v.passed ? "PASS" : "FAIL", id, title, elapsed,
              v.detail.empty() ? "" : ": ", v.detail.c_str());
  std::fflush(stdout);
  return v.passed;
}

Verdict zero_boost_identity() {
  Verdict v;
  const Boost rest = boost_from_beta(0.0);
  const double m = 1.0;
  for (int n : {0, 1, 2}) {
    for (double s : {0.01, 0.1, 0.5}) {
      const double sigma = s * m;
      for (double cf : {cf_closed_1p1(n, rest, sigma, m).value, cf_closed_3p1(n, rest, sigma, m).value,
                        cf_quadrature_1p1(n, rest, sigma, m).value, cf_quadrature_3p1(n, rest, sigma, m).value}) {
        if (!(std::abs(cf - 1.0) <= 1e-10)) v.fail(fmt("n=%g s=%g gives C_F=%.15g", n, s, cf));
      }
    }
  }
  return v;
}

Verdict closed_form_1p1() {
  Verdict v;
  const double value = cf_closed_1p1(2, boost_from_beta(0.99), 0.49, 0.5).value;
  const double gamma = 1.0 / std::sqrt(1.0 - 0.99 * 0.99);
  const double arithmetic = 1.0 - 1.25 * (gamma - 1.0) / (gamma + 1.0) * 0.98 * 0.98;
  if (!(std::abs(value - 0.09633) <= 1e-4)) v.fail(fmt("C_F=%.8f, target 0.09633", value));
  if (!(std::abs(value - arithmetic) <= 1e-12)) v.fail(fmt("C_F=%.15f vs direct arithmetic %.15f", value, arithmetic));
  v.detail = v.passed ? fmt("C_F=%.6f", value) : v.detail;
  return v;
}

Verdict n_bound() {
  Verdict v;
  const auto bound = n_bound_at_beta(0.49, 0.5, boost_from_beta(0.99));
  if (!bound) {
    v.fail("no finite bound");
  } else if (!(std::abs(*bound - 2.27) <= 0.01)) {
    v.fail(fmt("bound=%.6f, target 2.27", *bound));
  } else {
    v.detail = fmt("n < %.5f", *bound);
  }
  return v;
}

Verdict n_zero_regressions() {
  Verdict v;
  const double c1 = loss_coefficient_1p1(0);
  const double c3 = loss_coefficient_3p1(0);
  const double c3_exact = 0.5 * (1.0 - 8.0 / (3.0 * std::numbers::pi));
  if (!(std::abs(c1 - 0.25) <= 1e-14)) v.fail(fmt("1+1 coefficient %.17g", c1));
  if (!(std::abs(c3 - c3_exact) <= 1e-14)) v.fail(fmt("3+1 coefficient %.17g vs %.17g", c3, c3_exact));
  // The coefficients must also be what the closed forms actually use.
  const Boost boost = boost_from_beta(0.8);
  const double k = boost.contraction(), s = 0.1;
  const double d1 = 1.0 - cf_closed_1p1(0, boost, s, 1.0).value;
  const double d3 = 1.0 - cf_closed_3p1(0, boost, s, 1.0).value;
  if (!(std::abs(d1 - 0.25 * k * s * s) <= 1e-14)) v.fail(fmt("1+1 loss %.17g", d1));
  if (!(std::abs(d3 - c3_exact * k * s * s) <= 1e-14)) v.fail(fmt("3+1 loss %.17g", d3));
  return v;
}

Verdict convergence() {
  Verdict v;
  const double m = 1.0;
  const std::vector<double> widths{0.005, 0.01, 0.02};
  double worst_1p1 = 0.0, worst_3p1 = 0.0;
  double r1_lo = 1e300, r1_hi = 0.0, r3_lo = 1e300, r3_hi = 0.0;
  for (int n : {0, 1, 2}) {
    for (double beta : {0.3, 0.8, 0.99}) {
      const Boost boost = boost_from_beta(beta);
      std::map<double, double> d1, d3;
      for (double s : widths) {
        d1[s] = std::abs(cf_quadrature_1p1(n, boost, s * m, m).value - cf_closed_1p1(n, boost, s * m, m).value);
        d3[s] = std::abs(cf_quadrature_3p1(n, boost, s * m, m).value - cf_closed_3p1(n, boost, s * m, m).value);
        worst_1p1 = std::max(worst_1p1, d1[s] / std::pow(s, 4));
        worst_3p1 = std::max(worst_3p1, d3[s] / std::pow(s, 3));
        if (!(d1[s] <= 10 * std::pow(s, 4))) v.fail(fmt("1+1 |dC_F|=%.3g at n=%g s=%g", d1[s], n, s));
        if (!(d3[s] <= 10 * std::pow(s, 3))) v.fail(fmt("3+1 |dC_F|=%.3g at n=%g s=%g", d3[s], n, s));
      }
      for (std::size_t i = 1; i < widths.size(); ++i) {
        const double r1 = d1[widths[i]] / d1[widths[i - 1]];
        const double r3 = d3[widths[i]] / d3[widths[i - 1]];
        r1_lo = std::min(r1_lo, r1), r1_hi = std::max(r1_hi, r1);
        r3_lo = std::min(r3_lo, r3), r3_hi = std::max(r3_hi, r3);
        if (!(r1 >= 12 && r1 <= 20)) v.fail(fmt("1+1 halving ratio %.3f at n=%g beta=%g", r1, n, beta));
        if (!(r3 >= 6 && r3 <= 10)) v.fail(fmt("3+1 halving ratio %.3f at n=%g beta=%g", r3, n, beta));
      }
    }
  }
  if (v.passed) {
    v.detail = fmt("max |dC_F|/s^4 = %.3g, max |dC_F|/s^3 = %.3g", worst_1p1, worst_3p1) +
               fmt(", ratios 1+1 [%.2f, %.2f]", r1_lo, r1_hi) + fmt(", 3+1 [%.2f, %.2f]", r3_lo, r3_hi);
  }
  return v;
}

Verdict invariants() {
  Verdict v;
  const auto check_rho = [&](const SpinDensityMatrix& rho, const char* setup, int n, double beta, double s) {
    if (!(std::abs(rho.trace() - 1.0) <= 1e-10)) v.fail(std::string(setup) + fmt(" trace at n=%g beta=%g s=%g", n, beta, s));
    const auto spec = eigenvalues(rho);
    for (double l : {spec.lambda_plus, spec.lambda_minus}) {
      if (!(l >= -1e-10 && l <= 1.0 + 1e-10)) v.fail(std::string(setup) + fmt(" eigenvalue %.3g at beta=%g s=%g", l, beta, s));
    }
  };
  int grid_points = 0;
  for (int n : {0, 1, 2}) {
    for (double beta : {0.0, 0.3, 0.8, 0.99}) {
      for (double s : {0.005, 0.01, 0.02, 0.1, 0.5, 0.98}) {
        const Boost boost = boost_from_beta(beta);
        check_rho(boosted_rho_1p1(WavePacket1D(n, s), boost, 1.0), "1+1", n, beta, s);
        check_rho(boosted_rho_3p1(WavePacket3D(n, s), boost, 1.0), "3+1", n, beta, s);
        grid_points += 2;
      }
    }
  }

  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> beta_dist(0.0, 0.999), log_mass(-3.0, 3.0), log_ratio(-4.0, 2.0),
      sign(-1.0, 1.0);
  double worst_ab = 0.0, worst_ij = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Boost boost = boost_from_beta(beta_dist(rng));
    const double m = std::pow(10.0, log_mass(rng));
    const double p = m * std::pow(10.0, log_ratio(rng));
    const auto ab = little_group_1p1(boost, sign(rng) < 0 ? -p : p, m);
    worst_ab = std::max(worst_ab, std::abs(ab.A * ab.A + ab.B * ab.B - 2.0) / 2.0);
    const auto f = little_group_3p1(boost, p, m);
    const double lhs = f.M * f.M + f.N * f.N * (2.0 * p * p / 3.0);
    worst_ij = std::max(worst_ij, std::abs(lhs - f.I * f.J) / (f.I * f.J));
  }
  if (!(worst_ab <= 1e-10)) v.fail(fmt("A^2+B^2=2 relative error %.3g", worst_ab));
  if (!(worst_ij <= 1e-10)) v.fail(fmt("M^2+N^2(px^2+py^2)=IJ relative error %.3g", worst_ij));
  if (v.passed) {
    v.detail = fmt("%g density matrices, 10^4 samples, worst unitarity %.2g / %.2g", grid_points, worst_ab, worst_ij);
  }
  return v;
}

Verdict figures() {
  Verdict v;
  using Curves = std::map<double, std::vector<double>>;  // series key -> C_F along sigma
  const auto curves = [](FigureId id, bool by_n) {
    Curves out;
    for (const auto& row : run_sweep(figure_preset(id).front())) out[by_n ? row.n : row.beta].push_back(*row.cf_closed);
    return out;
  };

  const Curves fig1 = curves(FigureId::fig1, false);
  if (fig1.size() != 4) v.fail("fig1 does not have four curves");
  for (const auto& [beta, cf] : fig1) {
    for (std::size_t i = 0; i < cf.size(); ++i) {
      if (beta == 0.0 && cf[i] != 1.0) v.fail(fmt("fig1 beta=0 curve is %.15g, not 1", cf[i]));
      if (beta > 0.0 && i > 0 && !(cf[i] < cf[i - 1])) v.fail(fmt("fig1 beta=%g not decreasing at index %g", beta, i));
    }
  }
  for (auto it = std::next(fig1.begin()); it != fig1.end(); ++it) {
    const auto& lower = std::prev(it)->second;
    for (std::size_t i = 0; i < it->second.size(); ++i) {
      if (!(it->second[i] < lower[i])) v.fail(fmt("fig1 beta=%g not below the slower curve at index %g", it->first, i));
    }
  }

  const Curves fig2 = curves(FigureId::fig2, false);
  double worst_flat = 0.0;
  for (const auto& [beta, cf] : fig2) {
    for (double c : cf) worst_flat = std::max(worst_flat, 1.0 - c);
  }
  if (fig2.size() != 4) v.fail("fig2 does not have four curves");
  if (!(worst_flat < 1e-7)) v.fail(fmt("fig2 max 1-C_F = %.3g", worst_flat));

  const Curves fig4 = curves(FigureId::fig4, true);
  if (fig4.size() != 3) v.fail("fig4 does not have three curves");
  for (auto it = std::next(fig4.begin()); it != fig4.end(); ++it) {
    const auto& lower = std::prev(it)->second;
    for (std::size_t i = 0; i < it->second.size(); ++i) {
      if (!(it->second[i] < lower[i])) v.fail(fmt("fig4 n=%g not below n-1 at index %g", it->first, i));
    }
  }
  if (v.passed) v.detail = fmt("fig2 max 1-C_F = %.3g", worst_flat);
  return v;
}

Verdict general_angle() {
  Verdict v;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> alpha_dist(0.0, 5.0), zeta_dist(-5.0, 5.0);
  const Vec3 e{0.0, 0.0, 1.0}, f{1.0, 0.0, 0.0};
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Boost boost = boost_from_rapidity(alpha_dist(rng));
    const double zeta = zeta_dist(rng);
    const auto w = wigner_angle_general(boost, zeta, e, f);
    const auto ab = little_group_1p1(boost, std::sinh(zeta), 1.0);
    const double s = w.sin_half_axis[1];
    worst = std::max({worst, std::abs(w.cos_half + s - ab.A), std::abs(w.cos_half - s - ab.B),
                      std::abs(w.sin_half_axis[0]), std::abs(w.sin_half_axis[2])});
  }
  if (!(worst <= 1e-12)) v.fail(fmt("max deviation %.3g", worst));
  else v.detail = fmt("max deviation %.2g", worst);
  return v;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "zero-boost identity", 1.0, zero_boost_identity);
  ok &= run_criterion(2, "1+1 closed form at n=2, beta=0.99, sigma=0.49, m=0.5", 0.0, closed_form_1p1);
  ok &= run_criterion(3, "n bound at beta=0.99", 0.0, n_bound);
  ok &= run_criterion(4, "n=0 loss coefficients", 0.0, n_zero_regressions);
  ok &= run_criterion(5, "quadrature vs closed form convergence", 30.0, convergence);
  ok &= run_criterion(6, "density-matrix invariants", 10.0, invariants);
  ok &= run_criterion(7, "figure shape properties", 0.0, figures);
  ok &= run_criterion(8, "general Wigner angle vs 1+1 factors", 0.0, general_angle);
  std::printf("%s\n", ok ? "ALL PASS" : "SOME CRITERIA FAILED");
  return ok ? 0 : 1;
}
