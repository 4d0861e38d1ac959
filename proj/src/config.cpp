#include <fstream>
#include <set>
#include <sstream>

#include "boostcoh/errors.hpp"
#include "boostcoh/sweep.hpp"
#include "json.hpp"

namespace boostcoh {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& object, const std::set<std::string>& allowed,
                         std::string_view context) {
  for (const auto& [key, value] : object.items()) {
    if (!allowed.contains(key))
      throw ValidationError("unknown key '" + key + "' in " + std::string(context));
  }
}

const json& require(const json& object, const char* key) {
  const auto it = object.find(key);
  if (it == object.end()) throw ValidationError(std::string("missing required key '") + key + "'");
  return *it;
}

std::vector<int> parse_exponents(const json& node) {
  if (!node.is_array()) throw ValidationError("n_values must be a list of integers");
  std::vector<int> values;
  for (const auto& v : node) {
    if (!v.is_number_integer()) throw ValidationError("n_values must be a list of integers");
    values.push_back(v.get<int>());
  }
  return values;
}

ParticlePreset parse_particle(const json& node) {
  if (node.is_string()) return find_preset(node.get<std::string>());
  if (!node.is_object())
    throw ValidationError("particle must be a preset name or an object with name and mass_mev");
  reject_unknown_keys(node, {"name", "mass_mev"}, "particle");
  return {require(node, "name").get<std::string>(), require(node, "mass_mev").get<double>()};
}

std::vector<double> parse_sigma(const json& node) {
  if (node.is_array()) return node.get<std::vector<double>>();
  if (!node.is_object())
    throw ValidationError("sigma_values must be a list or an object with min, max and count");
  reject_unknown_keys(node, {"min", "max", "count"}, "sigma_values");
  return linear_grid(require(node, "min").get<double>(), require(node, "max").get<double>(),
                     require(node, "count").get<int>());
}

QuadratureSpec parse_quadrature(const json& node) {
  if (!node.is_object()) throw ValidationError("quadrature must be an object");
  reject_unknown_keys(node,
                      {"relative_tolerance", "absolute_tolerance", "max_subdivisions",
                       "truncation_multiplier"},
                      "quadrature");
  QuadratureSpec spec;
  spec.relative_tolerance = node.value("relative_tolerance", spec.relative_tolerance);
  spec.absolute_tolerance = node.value("absolute_tolerance", spec.absolute_tolerance);
  spec.max_subdivisions = node.value("max_subdivisions", spec.max_subdivisions);
  spec.truncation_multiplier = node.value("truncation_multiplier", spec.truncation_multiplier);
  return spec;
}

SweepConfig from_json(const json& root) {
  if (!root.is_object()) throw ValidationError("config must be a JSON object");
  reject_unknown_keys(root,
                      {"setup", "particle", "n_values", "beta_values", "sigma_values", "methods",
                       "allow_extrapolation", "quadrature"},
                      "config");
  SweepConfig config;
  config.setup = parse_setup(require(root, "setup").get<std::string>());
  config.particle = parse_particle(require(root, "particle"));
  config.n_values = parse_exponents(require(root, "n_values"));
  config.beta_values = require(root, "beta_values").get<std::vector<double>>();
  config.sigma_values = parse_sigma(require(root, "sigma_values"));
  if (const auto it = root.find("methods"); it != root.end()) {
    config.methods.clear();
    for (const auto& m : *it) config.methods.push_back(parse_method(m.get<std::string>()));
  }
  config.allow_extrapolation = root.value("allow_extrapolation", false);
  if (const auto it = root.find("quadrature"); it != root.end())
    config.quadrature = parse_quadrature(*it);
  return config;
}

}  // namespace

SweepConfig parse_config_json(std::string_view text) {
  try {
    return from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw ValidationError(std::string("invalid config: ") + e.what());
  }
}

SweepConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read config file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_json(buffer.str());
}

std::string config_to_json(const SweepConfig& config) {
  json methods = json::array();
  for (Method m : config.methods) methods.push_back(std::string(to_string(m)));
  json root = {
      {"setup", std::string(to_string(config.setup))},
      {"particle", {{"name", config.particle.name}, {"mass_mev", config.particle.mass_mev}}},
      {"n_values", config.n_values},
      {"beta_values", config.beta_values},
      {"sigma_values", config.sigma_values},
      {"methods", methods},
      {"allow_extrapolation", config.allow_extrapolation},
      {"quadrature",
       {{"relative_tolerance", config.quadrature.relative_tolerance},
        {"absolute_tolerance", config.quadrature.absolute_tolerance},
        {"max_subdivisions", config.quadrature.max_subdivisions},
        {"truncation_multiplier", config.quadrature.truncation_multiplier}}},
  };
  return root.dump(2);
}

}  // namespace boostcoh
