#include "casimir/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace casimir {
namespace units {

namespace {

void check_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

void check_positive(double value, const char* what) {
  check_finite(value, what);
  if (value <= 0.0) {
    throw std::invalid_argument(std::string(what) + " must be positive");
  }
}

}  // namespace

double kelvin_to_natural(double T_kelvin) {
  check_positive(T_kelvin, "temperature in K");
  return T_kelvin * kBoltzmann_eV_K;
}

double natural_to_kelvin(double T_natural) {
  check_finite(T_natural, "temperature");
  return T_natural / kBoltzmann_eV_K;
}

double rad_per_second_to_natural(double omega) {
  check_finite(omega, "angular frequency in rad/s");
  return omega * kHbar_eV_s;
}

double natural_to_rad_per_second(double omega) {
  check_finite(omega, "angular frequency");
  return omega / kHbar_eV_s;
}

double meter_to_natural(double length_m) {
  check_positive(length_m, "length in m");
  return length_m / kHbarC_eV_m;
}

double natural_to_meter(double length_natural) {
  check_finite(length_natural, "length");
  return length_natural * kHbarC_eV_m;
}

double micrometer_to_natural(double length_um) {
  check_positive(length_um, "length in um");
  return meter_to_natural(length_um * 1e-6);
}

double natural_to_micrometer(double length_natural) {
  return natural_to_meter(length_natural) * 1e6;
}

Quantity from_si(double value, Unit unit) {
  switch (unit) {
    case Unit::eV:
      check_finite(value, "energy in eV");
      return {value, Dimension::Energy};
    case Unit::RadPerSecond:
      return {rad_per_second_to_natural(value), Dimension::Energy};
    case Unit::Kelvin:
      return {kelvin_to_natural(value), Dimension::Energy};
    case Unit::Meter:
      return {meter_to_natural(value), Dimension::Length};
    case Unit::Micrometer:
      return {micrometer_to_natural(value), Dimension::Length};
    case Unit::Nanometer:
      return {meter_to_natural(value * 1e-9), Dimension::Length};
  }
  throw std::invalid_argument("unknown unit");
}

double to_si(const Quantity& q, Unit unit) {
  check_finite(q.value, "quantity value");
  switch (unit) {
    case Unit::eV:
      if (q.dim != Dimension::Energy) break;
      return q.value;
    case Unit::RadPerSecond:
      if (q.dim != Dimension::Energy) break;
      return natural_to_rad_per_second(q.value);
    case Unit::Kelvin:
      if (q.dim != Dimension::Energy) break;
      return natural_to_kelvin(q.value);
    case Unit::Meter:
      if (q.dim != Dimension::Length) break;
      return natural_to_meter(q.value);
    case Unit::Micrometer:
      if (q.dim != Dimension::Length) break;
      return natural_to_micrometer(q.value);
    case Unit::Nanometer:
      if (q.dim != Dimension::Length) break;
      return natural_to_meter(q.value) * 1e9;
  }
  throw std::invalid_argument("unit does not match quantity dimension");
}

double energy_per_area_to_si(double f_natural) {
  // eV^3 -> J/m^2: one factor of e converts eV -> J, the remaining eV^2
  // divides by (hbar*c)^2 to become m^-2.
  constexpr double scale =
      kElementaryCharge_C / (kHbarC_eV_m * kHbarC_eV_m);
  return f_natural * scale;
}

double pressure_to_si(double p_natural) {
  constexpr double scale =
      kElementaryCharge_C / (kHbarC_eV_m * kHbarC_eV_m * kHbarC_eV_m);
  return p_natural * scale;
}

double entropy_per_area_to_si(double s_natural) {
  // eV^2 -> J/(m^2 K): S_natural is per unit temperature in eV, so divide
  // by k_B in eV/K to land on per-kelvin, then convert the eV^2 area term.
  constexpr double scale = kElementaryCharge_C /
                           (kHbarC_eV_m * kHbarC_eV_m) * kBoltzmann_eV_K;
  return s_natural * scale;
}

double effective_temperature(double a_natural) {
  check_positive(a_natural, "plate separation");
  return 1.0 / (2.0 * a_natural);
}

}  // namespace units
}  // namespace casimir
