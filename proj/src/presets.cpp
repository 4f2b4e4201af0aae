#include "casimir/presets.hpp"

#include <sstream>
#include <stdexcept>

#include "casimir/units.hpp"

namespace casimir {

DrudeParams gold_drude_params(bool residual_floor) {
  DrudeParams params;
  params.omega_p = 9.0;  // eV
  params.relaxation.nu_ref = 0.035;  // 35 meV at the 300 K anchor
  params.relaxation.T_ref = units::kelvin_to_natural(300.0);
  params.relaxation.theta_debye = units::kelvin_to_natural(175.0);
  params.relaxation.nu_residual =
      residual_floor ? units::rad_per_second_to_natural(5.32e7) : 0.0;
  return params;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "gold-paper-drude",  "gold-paper-drude-residual",
      "gold-paper-plasma", "gold-impedance-IR",
      "mica-eps7",         "dielectric-eps100",
      "ideal-metal",       "gold-paper",
  };
  return names;
}

MaterialResponse material_from_preset(const std::string& name) {
  if (name == "gold-paper-drude" || name == "gold-paper") {
    return MaterialResponse::drude(gold_drude_params(false));
  }
  if (name == "gold-paper-drude-residual") {
    return MaterialResponse::drude(gold_drude_params(true));
  }
  if (name == "gold-paper-plasma") {
    return MaterialResponse::plasma(9.0);
  }
  if (name == "gold-impedance-IR") {
    return MaterialResponse::infrared_optics(9.0);
  }
  if (name == "mica-eps7") {
    return MaterialResponse::constant_eps(7.0);
  }
  if (name == "dielectric-eps100") {
    return MaterialResponse::constant_eps(100.0);
  }
  if (name == "ideal-metal") {
    return MaterialResponse::ideal_metal();
  }
  std::ostringstream msg;
  msg << "unknown material preset '" << name << "'; known presets:";
  for (const auto& known : preset_names()) msg << " " << known;
  throw std::invalid_argument(msg.str());
}

}  // namespace casimir
