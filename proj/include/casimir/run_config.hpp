#pragma once

#include <string>

#include "casimir/materials.hpp"

// JSON run configuration for the sweep commands.  All values arrive in
// laboratory units (K, um, eV, meV) and are converted to natural units at
// parse time.  Parse/validation failures throw std::invalid_argument;
// unreadable files throw IoError.

namespace casimir {

enum class SweepQuantity { FreeEnergy, Pressure, Entropy };

const char* quantity_name(SweepQuantity q);              // kebab-case
SweepQuantity quantity_from_name(const std::string& s);  // throws

struct RangeSpec {
  double min = 0.0;  // natural units
  double max = 0.0;
  int n = 0;
};

struct RunConfig {
  MaterialResponse material = MaterialResponse::ideal_metal();
  std::string model_tag;  // preset name, or inline:<type>
  SweepQuantity quantity = SweepQuantity::Pressure;
  double rel_tol = 1e-6;
  std::string output_path;
  bool emit_plot_script = false;

  // Temperature sweep: fixed separation plus a temperature range.
  bool has_temperature_sweep = false;
  double a = 0.0;  // natural units
  RangeSpec T_range;

  // Separation sweep: fixed temperature plus a separation range.
  bool has_separation_sweep = false;
  double T = 0.0;  // natural units
  RangeSpec a_range;
};

// Parses and validates a JSON document (see the repository README for the
// schema).  `need` selects which sweep axes must be present.
enum class SweepAxis { Temperature, Separation };
RunConfig parse_run_config(const std::string& json_text, SweepAxis need);

// Reads the file then parses it.
RunConfig load_run_config(const std::string& path, SweepAxis need);

}  // namespace casimir
