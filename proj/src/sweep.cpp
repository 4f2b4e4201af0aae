#include "casimir/sweep.hpp"

#include <charconv>
#include <cstdio>
#include <exception>
#include <fstream>
#include <optional>
#include <string>
#include <system_error>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/parallel.hpp"
#include "casimir/thermo.hpp"
#include "casimir/units.hpp"

namespace casimir {

namespace {

// Free-energy rows invoke the summation engine directly; a tolerance margin
// keeps the reported error comfortably inside rel_tol * |value|.
double engine_tolerance(const RunConfig& config) {
  if (config.quantity == SweepQuantity::FreeEnergy) return 0.1 * config.rel_tol;
  // Differentiated quantities re-estimate their own (Richardson) error; the
  // underlying free energies just need to be quiet relative to it.
  return 1e-9;
}

struct PointResult {
  double value_si = 0.0;
  double abs_err_si = 0.0;
};

PointResult evaluate_point(const RunConfig& config, double a, double T) {
  const Geometry geom{a};
  const double tol = engine_tolerance(config);
  PointResult out;
  switch (config.quantity) {
    case SweepQuantity::FreeEnergy: {
      const FreeEnergyResult r = free_energy(geom, T, config.material, tol);
      out.value_si = units::energy_per_area_to_si(r.F);
      out.abs_err_si = units::energy_per_area_to_si(r.abs_error);
      break;
    }
    case SweepQuantity::Pressure: {
      const PressureResult r = pressure(geom, T, config.material, tol);
      out.value_si = units::pressure_to_si(r.P);
      out.abs_err_si = units::pressure_to_si(r.richardson_error);
      break;
    }
    case SweepQuantity::Entropy: {
      const EntropyResult r = entropy(geom, T, config.material, tol);
      out.value_si = units::entropy_per_area_to_si(r.S);
      out.abs_err_si = units::entropy_per_area_to_si(r.richardson_error);
      break;
    }
  }
  return out;
}

std::vector<SweepRow> run_sweep(const RunConfig& config,
                                const std::vector<double>& a_values,
                                const std::vector<double>& T_values) {
  const int n = static_cast<int>(a_values.size());
  std::vector<std::optional<PointResult>> slots(n);
  std::vector<std::exception_ptr> failures(n);

  parallel_for(n, [&](int i) {
    try {
      slots[i] = evaluate_point(config, a_values[i], T_values[i]);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  });

  std::vector<SweepRow> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (failures[i]) {
      std::string detail;
      try {
        std::rethrow_exception(failures[i]);
      } catch (const std::exception& e) {
        detail = e.what();
      } catch (...) {
        detail = "unknown error";
      }
      char where[160];
      std::snprintf(where, sizeof(where),
                    "%s at T = %.6g K, a = %.6g um failed: ",
                    quantity_name(config.quantity),
                    units::natural_to_kelvin(T_values[i]),
                    units::natural_to_micrometer(a_values[i]));
      throw SweepError(where + detail, std::move(rows));
    }
    SweepRow row;
    row.T_K = units::natural_to_kelvin(T_values[i]);
    row.a_um = units::natural_to_micrometer(a_values[i]);
    row.value_si = slots[i]->value_si;
    row.abs_err_si = slots[i]->abs_err_si;
    row.model_tag = config.model_tag;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<SweepRow> run_temperature_sweep(const RunConfig& config) {
  if (!config.has_temperature_sweep) {
    throw std::invalid_argument("config: temperature sweep requires a_um and T_range");
  }
  const std::vector<double> T_values =
      temperature_grid(config.T_range.min, config.T_range.max, config.T_range.n);
  const std::vector<double> a_values(T_values.size(), config.a);
  return run_sweep(config, a_values, T_values);
}

std::vector<SweepRow> run_separation_sweep(const RunConfig& config) {
  if (!config.has_separation_sweep) {
    throw std::invalid_argument("config: separation sweep requires T_K and a_range");
  }
  std::vector<double> a_values(config.a_range.n);
  const double step =
      (config.a_range.max - config.a_range.min) / (config.a_range.n - 1);
  for (int i = 0; i < config.a_range.n; ++i) {
    a_values[i] = config.a_range.min + step * i;
  }
  a_values.back() = config.a_range.max;
  const std::vector<double> T_values(a_values.size(), config.T);
  return run_sweep(config, a_values, T_values);
}

std::string format_csv_number(double value) {
  char buf[40];
  const std::to_chars_result res =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::scientific, 11);
  if (res.ec != std::errc()) throw std::logic_error("number formatting failed");
  return std::string(buf, res.ptr);
}

void write_sweep_csv(const std::string& path, SweepQuantity quantity,
                     const std::vector<SweepRow>& rows,
                     const std::string& partial_note) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file '" + path + "'");
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& row : rows) {
    out << format_csv_number(row.T_K) << ',' << format_csv_number(row.a_um)
        << ',' << quantity_name(quantity) << ',' << format_csv_number(row.value_si)
        << ',' << format_csv_number(row.abs_err_si) << ',' << row.model_tag << '\n';
  }
  if (!partial_note.empty()) out << "# PARTIAL: " << partial_note << '\n';
  out.flush();
  if (!out) throw IoError("failed writing output file '" + path + "'");
}

}  // namespace casimir
