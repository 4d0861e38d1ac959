#include "boostcoh/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "boostcoh/errors.hpp"

namespace boostcoh {

namespace {

template <typename T>
std::vector<T> sorted_unique(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

struct GridPoint {
  int n;
  double beta;
  double sigma;
};

SweepRow evaluate_point(const SweepConfig& config, const GridPoint& point) {
  const double m = config.particle.mass_mev;
  SweepRow row;
  row.setup = config.setup;
  row.particle_name = config.particle.name;
  row.mass_mev = m;
  row.n = point.n;
  row.beta = point.beta;
  row.sigma_mev = point.sigma;
  row.extrapolated = point.sigma / m > kExtrapolationThreshold;

  const Boost boost = boost_from_beta(point.beta);
  const bool dim1 = config.setup == Setup::dim_1p1;

  if (config.has_method(Method::closed_form)) {
    try {
      row.cf_closed = dim1 ? cf_closed_1p1(point.n, boost, point.sigma, m, config.allow_extrapolation).value
                           : cf_closed_3p1(point.n, boost, point.sigma, m, config.allow_extrapolation).value;
    } catch (const std::exception& e) {
      row.error = std::string("closed_form: ") + e.what();
    }
  }
  if (config.has_method(Method::quadrature)) {
    try {
      row.cf_quadrature = dim1 ? cf_quadrature_1p1(point.n, boost, point.sigma, m, config.quadrature).value
                               : cf_quadrature_3p1(point.n, boost, point.sigma, m, config.quadrature).value;
    } catch (const std::exception& e) {
      const std::string msg = std::string("quadrature: ") + e.what();
      row.error = row.error ? *row.error + "; " + msg : msg;
    }
  }
  if (row.cf_closed && row.cf_quadrature) row.abs_diff = std::abs(*row.cf_closed - *row.cf_quadrature);
  return row;
}

}  // namespace

std::string_view to_string(Setup setup) {
  return setup == Setup::dim_1p1 ? "dim_1p1" : "dim_3p1";
}

std::string_view to_string(Method method) {
  return method == Method::closed_form ? "closed_form" : "quadrature";
}

Setup parse_setup(std::string_view text) {
  if (text == "dim_1p1") return Setup::dim_1p1;
  if (text == "dim_3p1") return Setup::dim_3p1;
  throw ValidationError("unknown setup '" + std::string(text) + "' (expected dim_1p1 or dim_3p1)");
}

Method parse_method(std::string_view text) {
  if (text == "closed_form") return Method::closed_form;
  if (text == "quadrature") return Method::quadrature;
  throw ValidationError("unknown method '" + std::string(text) +
                        "' (expected closed_form or quadrature)");
}

ParticlePreset electron() { return {"electron", 0.5}; }

ParticlePreset neutron() { return {"neutron", 939.36}; }

ParticlePreset find_preset(std::string_view name) {
  if (name == "electron") return electron();
  if (name == "neutron") return neutron();
  throw ValidationError("unknown particle preset '" + std::string(name) + "'");
}

std::vector<double> linear_grid(double min, double max, int count) {
  if (count < 1) throw ValidationError("grid count must be at least 1");
  if (!std::isfinite(min) || !std::isfinite(max) || min > max)
    throw ValidationError("grid bounds must be finite with min <= max");
  if (count == 1) {
    if (min != max) throw ValidationError("a single-point grid needs min == max");
    return {min};
  }
  std::vector<double> grid(static_cast<std::size_t>(count));
  const double step = (max - min) / (count - 1);
  for (int i = 0; i < count; ++i) grid[static_cast<std::size_t>(i)] = min + step * i;
  grid.back() = max;
  return grid;
}

bool SweepConfig::has_method(Method method) const {
  return std::find(methods.begin(), methods.end(), method) != methods.end();
}

void SweepConfig::validate() const {
  if (particle.name.empty()) throw ValidationError("particle name must not be empty");
  if (particle.name.find_first_of(",\"\r\n") != std::string::npos)
    throw ValidationError("particle name must not contain commas, quotes or line breaks");
  if (!(particle.mass_mev > 0.0) || !std::isfinite(particle.mass_mev))
    throw ValidationError("particle mass must be positive and finite");
  if (n_values.empty()) throw ValidationError("n_values must not be empty");
  if (beta_values.empty()) throw ValidationError("beta_values must not be empty");
  if (sigma_values.empty()) throw ValidationError("sigma_values must not be empty");
  if (methods.empty()) throw ValidationError("methods must not be empty");
  for (int n : n_values)
    if (n < 0) throw ValidationError("n_values must be non-negative integers");
  for (double beta : beta_values)
    if (!(beta >= 0.0 && beta < 1.0)) throw ValidationError("beta_values must lie in [0, 1)");
  for (double sigma : sigma_values) {
    if (!(sigma > 0.0) || !std::isfinite(sigma))
      throw ValidationError("sigma_values must be positive and finite");
    if (sigma >= particle.mass_mev && !allow_extrapolation) {
      std::ostringstream msg;
      msg << "sigma " << sigma << " MeV is not below the particle mass " << particle.mass_mev
          << " MeV; set allow_extrapolation to evaluate it";
      throw ValidationError(msg.str());
    }
  }
  try {
    quadrature.validate();
  } catch (const DomainError& e) {
    throw ValidationError(e.what());
  }
}

bool equivalent(const SweepConfig& a, const SweepConfig& b) {
  const auto& qa = a.quadrature;
  const auto& qb = b.quadrature;
  auto methods_a = a.methods, methods_b = b.methods;
  std::sort(methods_a.begin(), methods_a.end());
  std::sort(methods_b.begin(), methods_b.end());
  return a.setup == b.setup && a.particle == b.particle &&
         sorted_unique(a.n_values) == sorted_unique(b.n_values) &&
         sorted_unique(a.beta_values) == sorted_unique(b.beta_values) &&
         sorted_unique(a.sigma_values) == sorted_unique(b.sigma_values) &&
         methods_a == methods_b && a.allow_extrapolation == b.allow_extrapolation &&
         qa.relative_tolerance == qb.relative_tolerance &&
         qa.absolute_tolerance == qb.absolute_tolerance &&
         qa.max_subdivisions == qb.max_subdivisions &&
         qa.truncation_multiplier == qb.truncation_multiplier;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config, unsigned threads) {
  config.validate();

  std::vector<GridPoint> grid;
  for (int n : sorted_unique(config.n_values))
    for (double beta : sorted_unique(config.beta_values))
      for (double sigma : sorted_unique(config.sigma_values)) grid.push_back({n, beta, sigma});

  std::vector<SweepRow> rows(grid.size());
  const unsigned workers = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(std::max<std::size_t>(grid.size(), 1)));
  if (workers == 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) rows[i] = evaluate_point(config, grid[i]);
    return rows;
  }

  // Each slot has exactly one writer; the atomic counter hands out indices.
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < grid.size(); i = next++) rows[i] = evaluate_point(config, grid[i]);
    });
  }
  pool.clear();
  return rows;
}

FigureId parse_figure_id(std::string_view text) {
  if (text == "fig1") return FigureId::fig1;
  if (text == "fig2") return FigureId::fig2;
  if (text == "fig3") return FigureId::fig3;
  if (text == "fig4") return FigureId::fig4;
  throw ValidationError("unknown figure '" + std::string(text) + "' (expected fig1..fig4)");
}

std::string_view to_string(FigureId id) {
  switch (id) {
    case FigureId::fig1: return "fig1";
    case FigureId::fig2: return "fig2";
    case FigureId::fig3: return "fig3";
    case FigureId::fig4: return "fig4";
  }
  return "fig1";
}

std::vector<SweepConfig> figure_preset(FigureId id) {
  constexpr int kGridPoints = 99;
  // All figures share the electron's width axis, 0.005 m_e to 0.98 m_e
  // (0.0025 to 0.49 MeV), so the neutron curves are directly comparable.
  const double m_e = electron().mass_mev;
  const auto sigma_axis = linear_grid(0.005 * m_e, 0.98 * m_e, kGridPoints);
  const std::vector<double> boosts{0.0, 0.3, 0.8, 0.99};

  SweepConfig base;
  base.methods = {Method::closed_form};
  base.allow_extrapolation = true;
  base.sigma_values = sigma_axis;
  base.n_values = {2};

  switch (id) {
    case FigureId::fig1: {
      SweepConfig c = base;
      c.setup = Setup::dim_1p1;
      c.particle = electron();
      c.beta_values = boosts;
      return {c};
    }
    case FigureId::fig2: {
      SweepConfig c = base;
      c.setup = Setup::dim_3p1;
      c.particle = neutron();
      c.beta_values = boosts;
      return {c};
    }
    case FigureId::fig3: {
      SweepConfig e = base;
      e.setup = Setup::dim_1p1;
      e.particle = electron();
      e.beta_values = {0.99};
      SweepConfig n = base;
      n.setup = Setup::dim_3p1;
      n.particle = neutron();
      n.beta_values = {0.99};
      return {e, n};
    }
    case FigureId::fig4: {
      SweepConfig c = base;
      c.setup = Setup::dim_1p1;
      c.particle = electron();
      c.beta_values = {0.99};
      c.n_values = {0, 1, 2};
      return {c};
    }
  }
  return {};
}

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%#.12g", value);
  return buffer;
}

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  const auto optional_real = [](const std::optional<double>& v) {
    return v ? format_real(*v) : std::string();
  };
  out << kCsvHeader << '\n';
  for (const auto& row : rows) {
    out << to_string(row.setup) << ',' << row.particle_name << ',' << format_real(row.mass_mev)
        << ',' << row.n << ',' << format_real(row.beta) << ',' << format_real(row.sigma_mev) << ','
        << optional_real(row.cf_closed) << ',' << optional_real(row.cf_quadrature) << ','
        << optional_real(row.abs_diff) << ',' << (row.extrapolated ? "true" : "false") << '\n';
  }
}

void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + destination.string() + "' for writing");
  write_csv(rows, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing CSV to '" + destination.string() + "'");
}

}  // namespace boostcoh
