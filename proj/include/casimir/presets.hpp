#pragma once

#include <string>
#include <vector>

#include "casimir/materials.hpp"

// Named material configurations used throughout the CLI and tests.  The
// gold parameters pin omega_p = 9.0 eV, nu(300 K) = 35 meV and a Debye
// temperature of 175 K.

namespace casimir {

// Gold Drude parameters shared by several presets.  residual_floor adds
// the impurity relaxation floor variant (5.32e7 rad/s).
DrudeParams gold_drude_params(bool residual_floor = false);

// Names accepted by material_from_preset, in display order.
const std::vector<std::string>& preset_names();

// Throws std::invalid_argument listing the known presets when the name is
// unknown.  "gold-paper" is an alias for "gold-paper-drude".
MaterialResponse material_from_preset(const std::string& name);

}  // namespace casimir
