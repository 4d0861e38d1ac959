#include "boostcoh/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "boostcoh/errors.hpp"

namespace boostcoh {

namespace {

// 21-point Kronrod extension of the 10-point Gauss-Legendre rule (QUADPACK qk21).
// Odd indices of kKronrodNodes are the Gauss nodes.
constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600082870402, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double lower;
  double upper;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Segment& a, const Segment& b) const {
    if (a.error != b.error) return a.error < b.error;
    return a.lower > b.lower;  // deterministic tie-break
  }
};

// Integrand on the working interval plus the map back to the caller's variable
// so that evaluation errors can report the original abscissa.
struct Mapped {
  const Integrand& f;
  enum class Kind { identity, upper_half_line, lower_half_line, whole_line } kind;
  double anchor = 0.0;

  double abscissa(double t) const {
    switch (kind) {
      case Kind::identity: return t;
      case Kind::upper_half_line: return anchor + t / (1.0 - t);
      case Kind::lower_half_line: return anchor - t / (1.0 - t);
      case Kind::whole_line: return t / (1.0 - t * t);
    }
    return t;
  }

  double jacobian(double t) const {
    switch (kind) {
      case Kind::identity: return 1.0;
      case Kind::upper_half_line:
      case Kind::lower_half_line: return 1.0 / ((1.0 - t) * (1.0 - t));
      case Kind::whole_line: {
        const double d = 1.0 - t * t;
        return (1.0 + t * t) / (d * d);
      }
    }
    return 1.0;
  }

  double operator()(double t) const {
    const double x = abscissa(t);
    const double y = f(x);
    if (!std::isfinite(y)) {
      std::ostringstream msg;
      msg << "integrand is not finite at x = " << x;
      throw EvaluationError(msg.str(), x);
    }
    if (y == 0.0) return 0.0;
    return y * jacobian(t);
  }
};

Segment apply_rule(const Mapped& g, double lower, double upper) {
  const double center = 0.5 * (lower + upper);
  const double half = 0.5 * (upper - lower);

  const double fc = g(center);
  double kronrod = fc * kKronrodWeights[10];
  double gauss = 0.0;
  for (std::size_t i = 0; i < 10; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double pair = g(center - dx) + g(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {lower, upper, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(relative_tolerance > 0.0) || !(absolute_tolerance > 0.0))
    throw DomainError("quadrature tolerances must be positive");
  if (max_subdivisions < 1) throw DomainError("max_subdivisions must be at least 1");
  if (!(truncation_multiplier >= 8.0))
    throw DomainError("truncation_multiplier must be at least 8");
}

IntegralResult integrate(const Integrand& f, double lower, double upper,
                         const QuadratureSpec& spec, std::optional<double> gaussian_scale) {
  spec.validate();
  if (std::isnan(lower) || std::isnan(upper) || !(lower < upper))
    throw DomainError("integration limits must satisfy lower < upper");

  Mapped g{f, Mapped::Kind::identity};
  const bool lower_inf = std::isinf(lower);
  const bool upper_inf = std::isinf(upper);

  if (lower_inf || upper_inf) {
    if (gaussian_scale) {
      const double scale = *gaussian_scale;
      if (!(scale > 0.0) || !std::isfinite(scale))
        throw DomainError("gaussian scale must be positive and finite");
      const double cut = spec.truncation_multiplier * scale;
      if (lower_inf) lower = upper_inf ? -cut : std::min(-cut, upper - cut);
      if (upper_inf) upper = std::max(cut, lower + cut);
    } else if (lower_inf && upper_inf) {
      g.kind = Mapped::Kind::whole_line;
      lower = -1.0;
      upper = 1.0;
    } else if (upper_inf) {
      g.kind = Mapped::Kind::upper_half_line;
      g.anchor = lower;
      lower = 0.0;
      upper = 1.0;
    } else {
      g.kind = Mapped::Kind::lower_half_line;
      g.anchor = upper;
      lower = 0.0;
      upper = 1.0;
    }
  }

  std::priority_queue<Segment, std::vector<Segment>, ByError> work;
  Segment first = apply_rule(g, lower, upper);
  double total = first.value;
  double total_error = first.error;
  work.push(first);

  const auto tolerance = [&] {
    return std::max(spec.relative_tolerance * std::abs(total), spec.absolute_tolerance);
  };

  int subdivisions = 0;
  while (total_error > tolerance()) {
    if (subdivisions >= spec.max_subdivisions) {
      std::ostringstream msg;
      msg << "quadrature did not converge after " << subdivisions
          << " subdivisions (estimate " << total << ", error " << total_error << ")";
      throw NonConvergenceError(msg.str(), total, total_error);
    }
    const Segment worst = work.top();
    const double mid = 0.5 * (worst.lower + worst.upper);
    if (!(mid > worst.lower && mid < worst.upper)) {
      std::ostringstream msg;
      msg << "quadrature interval collapsed near x = " << g.abscissa(mid)
          << " (estimate " << total << ", error " << total_error << ")";
      throw NonConvergenceError(msg.str(), total, total_error);
    }
    work.pop();
    const Segment left = apply_rule(g, worst.lower, mid);
    const Segment right = apply_rule(g, mid, worst.upper);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    work.push(left);
    work.push(right);
    ++subdivisions;
  }

  // Re-sum from scratch in interval order so the result does not depend on
  // the rounding history of the running totals.
  std::vector<Segment> segments;
  segments.reserve(work.size());
  while (!work.empty()) {
    segments.push_back(work.top());
    work.pop();
  }
  std::sort(segments.begin(), segments.end(),
            [](const Segment& a, const Segment& b) { return a.lower < b.lower; });
  IntegralResult result;
  for (const auto& s : segments) {
    result.value += s.value;
    result.error_estimate += s.error;
  }
  result.subdivisions_used = subdivisions;
  return result;
}

}  // namespace boostcoh
