#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boostcoh/coherence.hpp"
#include "boostcoh/quadrature.hpp"

namespace boostcoh {

enum class Setup { dim_1p1, dim_3p1 };

std::string_view to_string(Setup setup);
std::string_view to_string(Method method);
Setup parse_setup(std::string_view text);
Method parse_method(std::string_view text);

struct ParticlePreset {
  std::string name;
  double mass_mev = 0.0;

  bool operator==(const ParticlePreset&) const = default;
};

ParticlePreset electron();
ParticlePreset neutron();
/// Looks up a named preset; throws ValidationError for unknown names.
ParticlePreset find_preset(std::string_view name);

/// `count` linearly spaced values from `min` to `max` inclusive.
std::vector<double> linear_grid(double min, double max, int count);

struct SweepConfig {
  Setup setup = Setup::dim_1p1;
  ParticlePreset particle;
  std::vector<int> n_values;
  std::vector<double> beta_values;
  std::vector<double> sigma_values;
  std::vector<Method> methods{Method::closed_form, Method::quadrature};
  bool allow_extrapolation = false;
  QuadratureSpec quadrature;

  /// Throws ValidationError describing the first problem found.
  void validate() const;

  bool has_method(Method method) const;
};

bool equivalent(const SweepConfig& a, const SweepConfig& b);

struct SweepRow {
  Setup setup = Setup::dim_1p1;
  std::string particle_name;
  double mass_mev = 0.0;
  int n = 0;
  double beta = 0.0;
  double sigma_mev = 0.0;
  std::optional<double> cf_closed;
  std::optional<double> cf_quadrature;
  std::optional<double> abs_diff;
  bool extrapolated = false;
  /// Set when a method failed at this point; not part of the CSV schema.
  std::optional<std::string> error;
};

/// Evaluates every (n, beta, sigma) point, ordered n-major, then beta,
/// then sigma, each ascending. Validation happens before any evaluation.
/// Points are independent and may be spread over `threads` workers; the
/// output does not depend on the thread count. A failing point keeps its
/// `error` message and the sweep continues.
std::vector<SweepRow> run_sweep(const SweepConfig& config, unsigned threads = 1);

enum class FigureId { fig1, fig2, fig3, fig4 };

FigureId parse_figure_id(std::string_view text);
std::string_view to_string(FigureId id);

/// Sweep configurations reproducing one figure. Figure 3 overlays two
/// particles in different setups and therefore has two series.
std::vector<SweepConfig> figure_preset(FigureId id);

inline constexpr std::string_view kCsvHeader =
    "setup,particle,mass_mev,n,beta,sigma_mev,cf_closed,cf_quadrature,abs_diff,extrapolated";

/// Header plus one LF-terminated line per row; reals with 12 significant digits.
void write_csv(const std::vector<SweepRow>& rows, std::ostream& out);

/// Throws std::runtime_error naming the path when the file cannot be written.
void emit_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& destination);

/// Formats a real the way the CSV does.
std::string format_real(double value);

// JSON config files. Keys are exactly the SweepConfig field names.
SweepConfig parse_config_json(std::string_view text);
SweepConfig load_config(const std::filesystem::path& path);
std::string config_to_json(const SweepConfig& config);

}  // namespace boostcoh
