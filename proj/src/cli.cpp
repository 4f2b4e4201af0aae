#include "casimir/cli.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/asymptotics.hpp"
#include "casimir/errors.hpp"
#include "casimir/parallel.hpp"
#include "casimir/plot.hpp"
#include "casimir/presets.hpp"
#include "casimir/sweep.hpp"
#include "casimir/thermo.hpp"
#include "casimir/units.hpp"

namespace casimir {

namespace {

std::string format_fixed(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

void run_sweep_command(const RunConfig& config, bool temperature_axis,
                       std::ostream& out) {
  std::vector<SweepRow> rows;
  try {
    rows = temperature_axis ? run_temperature_sweep(config)
                            : run_separation_sweep(config);
  } catch (const SweepError& e) {
    write_sweep_csv(config.output_path, config.quantity, e.completed_rows(),
                    e.what());
    throw NumericsError(std::string("sweep aborted: ") + e.what() +
                            " (partial rows written to " + config.output_path + ")",
                        0.0, 0.0);
  }
  write_sweep_csv(config.output_path, config.quantity, rows);
  out << "wrote " << rows.size() << " rows to " << config.output_path << "\n";
  if (config.emit_plot_script) {
    const std::string script = config.output_path + ".gp";
    emit_plot_script({config.output_path}, script);
    out << "wrote plot script " << script << "\n";
  }
}

// Low-temperature entropy scale used as the Nernst yardstick: the metal
// plasma wavelength enters when the material defines one, otherwise the
// ideal-reflector value applies.
double nernst_reference(const Geometry& geom, const MaterialResponse& material) {
  double omega_p = 0.0;
  switch (material.kind()) {
    case MaterialKind::Drude:
      omega_p = material.drude_params().omega_p;
      break;
    case MaterialKind::Plasma:
    case MaterialKind::InfraredOptics:
      omega_p = material.omega_p();
      break;
    default:
      omega_p = 0.0;
      break;
  }
  if (omega_p > 0.0) {
    DrudeParams params;
    params.omega_p = omega_p;
    return zero_temperature_entropy(geom, params);
  }
  const double a = geom.a;
  return -units::kZeta3 / (16.0 * units::kPi * a * a);
}

}  // namespace

void cmd_sweep_temperature(const RunConfig& config, std::ostream& out) {
  run_sweep_command(config, /*temperature_axis=*/true, out);
}

void cmd_sweep_separation(const RunConfig& config, std::ostream& out) {
  run_sweep_command(config, /*temperature_axis=*/false, out);
}

bool cmd_nernst_audit(const std::string& preset, double a_um,
                      const std::vector<double>& t_list_K, double rel_tol,
                      const std::string& csv_out, std::ostream& out) {
  if (!(a_um > 0.0)) throw std::invalid_argument("a-um must be positive");
  const MaterialResponse material = material_from_preset(preset);
  const Geometry geom{units::micrometer_to_natural(a_um)};

  std::vector<double> T_sequence(t_list_K.size());
  for (std::size_t i = 0; i < t_list_K.size(); ++i) {
    T_sequence[i] = units::kelvin_to_natural(t_list_K[i]);
  }

  const NernstResult fit = nernst_limit(geom, material, T_sequence, rel_tol);
  const double reference = nernst_reference(geom, material);
  const double s0_si = units::entropy_per_area_to_si(fit.S0);
  const double ref_si = units::entropy_per_area_to_si(reference);
  const double ratio = fit.S0 / reference;
  const bool violation = fit.S0 < -0.05 * std::fabs(reference);

  out << "nernst audit: material=" << preset << " a_um=" << format_fixed("%.6g", a_um)
      << "\n";
  out << "  T points (K):";
  for (double t : t_list_K) out << ' ' << format_fixed("%.6g", t);
  out << "\n";
  out << "  S(T->0) extrapolated   = " << format_fixed("%.6e", s0_si)
      << " J/(m^2 K)  [fit residual " << format_fixed("%.3e",
             units::entropy_per_area_to_si(fit.fit_error))
      << "]\n";
  out << "  low-T reference scale  = " << format_fixed("%.6e", ref_si)
      << " J/(m^2 K)\n";
  out << "  ratio (S0 / reference) = " << format_fixed("%.6f", ratio) << "\n";
  out << "  verdict: " << (violation ? "VIOLATION" : "CONSISTENT") << "\n";

  if (!csv_out.empty()) {
    std::vector<SweepRow> rows(T_sequence.size());
    std::vector<std::optional<EntropyResult>> results(T_sequence.size());
    parallel_for(static_cast<int>(T_sequence.size()), [&](int i) {
      results[i] = entropy(geom, T_sequence[i], material, rel_tol);
    });
    for (std::size_t i = 0; i < T_sequence.size(); ++i) {
      rows[i].T_K = t_list_K[i];
      rows[i].a_um = a_um;
      rows[i].value_si = units::entropy_per_area_to_si(results[i]->S);
      rows[i].abs_err_si = units::entropy_per_area_to_si(results[i]->richardson_error);
      rows[i].model_tag = preset;
    }
    write_sweep_csv(csv_out, SweepQuantity::Entropy, rows);
    out << "  wrote audit points to " << csv_out << "\n";
  }
  return !violation;
}

bool cmd_validate_asymptotics(const std::string& preset, double a_um,
                              const std::vector<double>& t_list_K,
                              double rel_tol, std::ostream& out) {
  if (!(a_um > 0.0)) throw std::invalid_argument("a-um must be positive");
  const MaterialResponse material = material_from_preset(preset);
  if (material.kind() != MaterialKind::Drude) {
    throw std::invalid_argument(
        "validate-asym requires a drude-type preset (the low-temperature "
        "expansion is specific to that model); got '" + preset + "'");
  }
  const Geometry geom{units::micrometer_to_natural(a_um)};
  std::vector<double> T_list(t_list_K.size());
  for (std::size_t i = 0; i < t_list_K.size(); ++i) {
    T_list[i] = units::kelvin_to_natural(t_list_K[i]);
  }

  const std::vector<AsymptoticsComparison> table =
      validate_asymptotics(geom, material.drude_params(), T_list, rel_tol);

  out << "low-temperature expansion vs direct summation: material=" << preset
      << " a_um=" << format_fixed("%.6g", a_um) << "\n";
  out << "      T_K        F_direct (J/m^2)      F_expansion (J/m^2)    rel_diff\n";
  bool all_pass = true;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const bool pass = table[i].rel_diff < 1e-2;
    all_pass = all_pass && pass;
    out << format_fixed("%9.4g", t_list_K[i]) << "  "
        << format_fixed("%22.12e", units::energy_per_area_to_si(table[i].F_direct))
        << "  "
        << format_fixed("%22.12e", units::energy_per_area_to_si(table[i].F_asym))
        << "  " << format_fixed("%.3e", table[i].rel_diff) << "  "
        << (pass ? "PASS" : "FAIL") << "\n";
  }
  out << (all_pass ? "all rows PASS" : "criterion not met") << "\n";
  return all_pass;
}

void cmd_emit_plot_script(const std::vector<std::string>& csv_paths,
                          const std::string& script_path, std::ostream& out) {
  emit_plot_script(csv_paths, script_path);
  out << "wrote plot script " << script_path << "\n";
}

}  // namespace casimir
