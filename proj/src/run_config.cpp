#include "casimir/run_config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "casimir/errors.hpp"
#include "casimir/presets.hpp"
#include "casimir/units.hpp"

namespace casimir {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument("config: " + message);
}

double require_number(const json& node, const std::string& key) {
  if (!node.contains(key)) fail("missing required field '" + key + "'");
  const json& value = node.at(key);
  if (!value.is_number()) fail("field '" + key + "' must be a number");
  return value.get<double>();
}

double optional_number(const json& node, const std::string& key, double fallback) {
  if (!node.contains(key)) return fallback;
  const json& value = node.at(key);
  if (!value.is_number()) fail("field '" + key + "' must be a number");
  return value.get<double>();
}

int require_int(const json& node, const std::string& key) {
  if (!node.contains(key)) fail("missing required field '" + key + "'");
  const json& value = node.at(key);
  if (!value.is_number_integer()) fail("field '" + key + "' must be an integer");
  return value.get<int>();
}

std::string require_string(const json& node, const std::string& key) {
  if (!node.contains(key)) fail("missing required field '" + key + "'");
  const json& value = node.at(key);
  if (!value.is_string()) fail("field '" + key + "' must be a string");
  return value.get<std::string>();
}

// Inline material specification: {"type": ..., parameters in lab units}.
MaterialResponse material_from_inline(const json& node, std::string* tag) {
  const std::string type = require_string(node, "type");
  *tag = "inline:" + type;
  if (type == "drude") {
    DrudeParams p;
    p.omega_p = require_number(node, "omega_p_eV");
    p.relaxation.nu_ref = 1e-3 * require_number(node, "nu_ref_meV");
    p.relaxation.T_ref = units::kelvin_to_natural(require_number(node, "T_ref_K"));
    p.relaxation.theta_debye = units::kelvin_to_natural(require_number(node, "theta_K"));
    p.relaxation.nu_residual = 1e-3 * optional_number(node, "nu_residual_meV", 0.0);
    if (p.omega_p <= 0.0) fail("omega_p_eV must be positive");
    if (p.relaxation.nu_ref <= 0.0) fail("nu_ref_meV must be positive");
    if (p.relaxation.T_ref <= 0.0) fail("T_ref_K must be positive");
    if (p.relaxation.theta_debye <= 0.0) fail("theta_K must be positive");
    if (p.relaxation.nu_residual < 0.0) fail("nu_residual_meV must be nonnegative");
    return MaterialResponse::drude(p);
  }
  if (type == "plasma") {
    const double omega_p = require_number(node, "omega_p_eV");
    if (omega_p <= 0.0) fail("omega_p_eV must be positive");
    return MaterialResponse::plasma(omega_p);
  }
  if (type == "constant-eps") {
    const double eps = require_number(node, "eps");
    if (!(eps > 1.0)) fail("eps must exceed 1");
    return MaterialResponse::constant_eps(eps);
  }
  if (type == "ideal-metal") {
    return MaterialResponse::ideal_metal();
  }
  if (type == "infrared-optics") {
    const double omega_p = require_number(node, "omega_p_eV");
    if (omega_p <= 0.0) fail("omega_p_eV must be positive");
    return MaterialResponse::infrared_optics(omega_p);
  }
  if (type == "power-law-impedance") {
    const double prefactor = require_number(node, "prefactor");
    const double exponent = require_number(node, "exponent");
    if (prefactor <= 0.0) fail("prefactor must be positive");
    if (!(exponent > 0.0 && exponent < 1.0)) fail("exponent must lie in (0, 1)");
    return MaterialResponse::power_law_impedance(prefactor, exponent);
  }
  fail("unknown material type '" + type +
       "' (expected drude, plasma, constant-eps, ideal-metal, infrared-optics, "
       "or power-law-impedance)");
}

RangeSpec parse_temperature_range(const json& node) {
  RangeSpec range;
  const double min_K = require_number(node, "min_K");
  const double max_K = require_number(node, "max_K");
  range.n = require_int(node, "n");
  if (!(min_K > 0.0)) fail("T_range.min_K must be positive");
  if (!(max_K <= 2000.0)) fail("T_range.max_K must not exceed 2000 K");
  if (!(min_K < max_K)) fail("T_range requires min_K < max_K");
  if (range.n < 2 || range.n > 10000) fail("T_range.n must lie in [2, 10000]");
  range.min = units::kelvin_to_natural(min_K);
  range.max = units::kelvin_to_natural(max_K);
  return range;
}

RangeSpec parse_separation_range(const json& node) {
  RangeSpec range;
  const double min_um = require_number(node, "min_um");
  const double max_um = require_number(node, "max_um");
  range.n = require_int(node, "n");
  if (!(min_um >= 0.2 && max_um <= 5.0)) fail("a_range must lie within [0.2, 5] um");
  if (!(min_um < max_um)) fail("a_range requires min_um < max_um");
  if (range.n < 2 || range.n > 10000) fail("a_range.n must lie in [2, 10000]");
  range.min = units::micrometer_to_natural(min_um);
  range.max = units::micrometer_to_natural(max_um);
  return range;
}

}  // namespace

const char* quantity_name(SweepQuantity q) {
  switch (q) {
    case SweepQuantity::FreeEnergy: return "free-energy";
    case SweepQuantity::Pressure: return "pressure";
    case SweepQuantity::Entropy: return "entropy";
  }
  throw std::logic_error("unreachable quantity");
}

SweepQuantity quantity_from_name(const std::string& s) {
  if (s == "free-energy") return SweepQuantity::FreeEnergy;
  if (s == "pressure") return SweepQuantity::Pressure;
  if (s == "entropy") return SweepQuantity::Entropy;
  throw std::invalid_argument(
      "config: unknown quantity '" + s +
      "' (expected free-energy, pressure, or entropy)");
}

RunConfig parse_run_config(const std::string& json_text, SweepAxis need) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("top-level JSON value must be an object");

  RunConfig config;

  if (!doc.contains("material")) fail("missing required field 'material'");
  const json& material = doc.at("material");
  if (material.is_string()) {
    config.model_tag = material.get<std::string>();
    config.material = material_from_preset(config.model_tag);
  } else if (material.is_object()) {
    config.material = material_from_inline(material, &config.model_tag);
  } else {
    fail("'material' must be a preset name or an object");
  }

  config.quantity = quantity_from_name(require_string(doc, "quantity"));
  config.rel_tol = optional_number(doc, "rel_tol", 1e-6);
  if (!(config.rel_tol < 1e-2)) fail("rel_tol must be below 1e-2");
  // Floors keep the per-row error budget achievable.  Differentiated
  // quantities inherit an irreducible truncation error from the fixed
  // finite-difference step; for entropy near T -> 0 (where S ~ T^2 and the
  // step is T/4) the reported relative error approaches 2/384 ~ 5.2e-3.
  switch (config.quantity) {
    case SweepQuantity::FreeEnergy:
      if (!(config.rel_tol >= 1e-12)) fail("rel_tol must be at least 1e-12 for free-energy sweeps");
      break;
    case SweepQuantity::Pressure:
      if (!(config.rel_tol >= 1e-4)) fail("rel_tol must be at least 1e-4 for pressure sweeps");
      break;
    case SweepQuantity::Entropy:
      if (!(config.rel_tol >= 6e-3)) fail("rel_tol must be at least 6e-3 for entropy sweeps");
      break;
  }

  config.output_path = require_string(doc, "output_path");
  if (config.output_path.empty()) fail("output_path must be nonempty");
  if (doc.contains("emit_plot_script")) {
    const json& flag = doc.at("emit_plot_script");
    if (!flag.is_boolean()) fail("emit_plot_script must be a boolean");
    config.emit_plot_script = flag.get<bool>();
  }

  if (need == SweepAxis::Temperature) {
    const double a_um = require_number(doc, "a_um");
    if (!(a_um > 0.0)) fail("a_um must be positive");
    config.a = units::micrometer_to_natural(a_um);
    if (!doc.contains("T_range")) fail("missing required field 'T_range'");
    config.T_range = parse_temperature_range(doc.at("T_range"));
    config.has_temperature_sweep = true;
  } else {
    const double T_K = require_number(doc, "T_K");
    if (!(T_K > 0.0 && T_K <= 2000.0)) fail("T_K must lie in (0, 2000] K");
    config.T = units::kelvin_to_natural(T_K);
    if (!doc.contains("a_range")) fail("missing required field 'a_range'");
    config.a_range = parse_separation_range(doc.at("a_range"));
    config.has_separation_sweep = true;
  }

  return config;
}

RunConfig load_run_config(const std::string& path, SweepAxis need) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading config file '" + path + "'");
  return parse_run_config(buffer.str(), need);
}

}  // namespace casimir
