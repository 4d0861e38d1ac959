#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "boostcoh/checks.hpp"
#include "boostcoh/coherence.hpp"
#include "boostcoh/errors.hpp"
#include "boostcoh/sweep.hpp"

namespace boostcoh::cli {

namespace {

struct SweepOverrides {
  std::string config_path;
  std::string out_path;
  std::optional<std::string> setup;
  std::optional<std::string> particle;
  std::optional<double> mass;
  std::vector<int> n_values;
  std::vector<double> beta_values;
  std::vector<double> sigma_values;
  std::vector<std::string> methods;
  bool allow_extrapolation = false;
  unsigned threads = 1;
};

struct FigureOptions {
  std::string id;
  std::string out_path;
  bool with_quadrature = false;
  unsigned threads = 1;
};

struct BoundOptions {
  double sigma = 0.0;
  double mass = 0.0;
  std::optional<double> beta;
};

int write_rows(const std::vector<SweepRow>& rows, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
  if (out_path.empty() || out_path == "-") {
    write_csv(rows, out);
  } else {
    emit_csv(rows, out_path);
  }
  int failures = 0;
  for (const auto& row : rows) {
    if (row.error) {
      ++failures;
      err << "error at n=" << row.n << " beta=" << format_real(row.beta)
          << " sigma=" << format_real(row.sigma_mev) << ": " << *row.error << '\n';
    }
  }
  return failures == 0 ? kExitOk : kExitComputation;
}

int do_sweep(const SweepOverrides& o, std::ostream& out, std::ostream& err) {
  SweepConfig config = load_config(o.config_path);
  if (o.setup) config.setup = parse_setup(*o.setup);
  if (o.particle) config.particle = find_preset(*o.particle);
  if (o.mass) {
    config.particle.mass_mev = *o.mass;
    if (!o.particle) config.particle.name = "custom";
  }
  if (!o.n_values.empty()) config.n_values = o.n_values;
  if (!o.beta_values.empty()) config.beta_values = o.beta_values;
  if (!o.sigma_values.empty()) config.sigma_values = o.sigma_values;
  if (!o.methods.empty()) {
    config.methods.clear();
    for (const auto& m : o.methods) config.methods.push_back(parse_method(m));
  }
  if (o.allow_extrapolation) config.allow_extrapolation = true;
  return write_rows(run_sweep(config, o.threads), o.out_path, out, err);
}

int do_figure(const FigureOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<SweepRow> rows;
  for (auto config : figure_preset(parse_figure_id(o.id))) {
    if (o.with_quadrature) config.methods = {Method::closed_form, Method::quadrature};
    auto part = run_sweep(config, o.threads);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return write_rows(rows, o.out_path, out, err);
}

int do_bound(const BoundOptions& o, std::ostream& out) {
  out << "n_bound_ultrarelativistic " << format_real(n_bound_ultrarelativistic(o.sigma, o.mass))
      << '\n';
  if (o.beta) {
    const auto bound = n_bound_at_beta(o.sigma, o.mass, boost_from_beta(*o.beta));
    out << "n_bound_at_beta " << (bound ? format_real(*bound) : std::string("unbounded")) << '\n';
  }
  return kExitOk;
}

int do_check(std::ostream& out) {
  bool all = true;
  for (const auto& c : run_fast_checks()) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
    all = all && c.passed;
  }
  return all ? kExitOk : kExitComputation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spin coherence of boosted generalized Gaussian wave packets", "boostcoh"};
  app.require_subcommand(1);

  SweepOverrides sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a parameter grid from a JSON config");
  sweep_cmd->add_option("--config", sweep.config_path, "JSON sweep config")->required();
  sweep_cmd->add_option("--out", sweep.out_path, "CSV destination (stdout if omitted)");
  sweep_cmd->add_option("--setup", sweep.setup, "dim_1p1 or dim_3p1");
  sweep_cmd->add_option("--particle", sweep.particle, "electron or neutron");
  sweep_cmd->add_option("--mass", sweep.mass, "particle mass in MeV");
  sweep_cmd->add_option("--n", sweep.n_values, "wave packet exponents");
  sweep_cmd->add_option("--beta", sweep.beta_values, "observer speeds v/c");
  sweep_cmd->add_option("--sigma", sweep.sigma_values, "wave packet widths in MeV");
  sweep_cmd->add_option("--methods", sweep.methods, "closed_form and/or quadrature");
  sweep_cmd->add_flag("--allow-extrapolation", sweep.allow_extrapolation,
                      "permit widths at or above the particle mass");
  sweep_cmd->add_option("--threads", sweep.threads, "worker threads")->check(CLI::PositiveNumber);

  FigureOptions figure;
  auto* figure_cmd = app.add_subcommand("figure", "Reproduce one of the coherence-vs-width figures");
  figure_cmd->add_option("id", figure.id, "fig1, fig2, fig3 or fig4")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4"}));
  figure_cmd->add_option("--out", figure.out_path, "CSV destination (stdout if omitted)");
  figure_cmd->add_flag("--with-quadrature", figure.with_quadrature,
                       "add the exact quadrature series next to the closed form");
  figure_cmd->add_option("--threads", figure.threads, "worker threads")->check(CLI::PositiveNumber);

  BoundOptions bound;
  auto* bound_cmd = app.add_subcommand("bound", "Upper bound on the exponent n");
  bound_cmd->add_option("--sigma", bound.sigma, "width in MeV")->required();
  bound_cmd->add_option("--mass", bound.mass, "mass in MeV")->required();
  bound_cmd->add_option("--beta", bound.beta, "observer speed v/c");

  auto* check_cmd = app.add_subcommand("check", "Run the fast invariant self-test");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (*sweep_cmd) return do_sweep(sweep, out, err);
    if (*figure_cmd) return do_figure(figure, out, err);
    if (*bound_cmd) return do_bound(bound, out);
    if (*check_cmd) return do_check(out);
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitValidation;
}

}  // namespace boostcoh::cli
