#pragma once

#include <numbers>

// Unit system used throughout the library: k_B = hbar = c = 1, with the
// electronvolt as the base energy unit.  Frequencies, temperatures and
// inverse lengths are all carried as energies in eV; lengths are carried
// in eV^-1.  Conversion to and from SI happens only at the boundaries
// (configuration input and CSV/report output).

namespace casimir {
namespace units {

// SI defining constants (exact by definition since the 2019 redefinition).
inline constexpr double kPlanck_J_s = 6.62607015e-34;
inline constexpr double kSpeedOfLight_m_s = 299792458.0;
inline constexpr double kBoltzmann_J_K = 1.380649e-23;
inline constexpr double kElementaryCharge_C = 1.602176634e-19;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kZeta3 = 1.2020569031595942854;  // Riemann zeta(3)
inline constexpr double kZeta5 = 1.0369277551433699263;  // Riemann zeta(5)

inline constexpr double kHbar_J_s = kPlanck_J_s / (2.0 * kPi);
inline constexpr double kHbar_eV_s = kHbar_J_s / kElementaryCharge_C;
inline constexpr double kBoltzmann_eV_K = kBoltzmann_J_K / kElementaryCharge_C;
// hbar*c in eV*m: multiplying an inverse length in m^-1 by this gives eV.
inline constexpr double kHbarC_eV_m = kHbar_eV_s * kSpeedOfLight_m_s;

struct PhysicalConstants {
  double planck_J_s = kPlanck_J_s;
  double hbar_J_s = kHbar_J_s;
  double c_m_s = kSpeedOfLight_m_s;
  double k_B_J_K = kBoltzmann_J_K;
  double e_C = kElementaryCharge_C;
  double pi = kPi;
  double zeta3 = kZeta3;
};

inline constexpr PhysicalConstants kConstants{};

enum class Dimension {
  Energy,        // eV: photon energies, Matsubara frequencies, temperatures
  Length,        // eV^-1
  EnergyPerArea, // eV^3: free energy per unit plate area
  Pressure,      // eV^4
  EntropyPerArea,// eV^2: entropy per unit plate area (S = -dF/dT, k_B = 1)
  Dimensionless
};

// External unit labels accepted at the SI boundary.
enum class Unit {
  eV,
  RadPerSecond,
  Kelvin,
  Meter,
  Micrometer,
  Nanometer
};

struct Quantity {
  double value = 0.0;  // magnitude in natural units
  Dimension dim = Dimension::Dimensionless;
};

// Convert an SI (or lab-convention) value into natural units.  Throws
// std::invalid_argument for non-finite input or a negative magnitude where
// one makes no sense (Kelvin, lengths).
Quantity from_si(double value, Unit unit);

// Convert a natural-unit quantity back to the requested external unit.
// Throws std::invalid_argument when the unit does not match the dimension.
double to_si(const Quantity& q, Unit unit);

// Scalar helpers for the conversions the engine actually performs.
double kelvin_to_natural(double T_kelvin);       // -> eV
double natural_to_kelvin(double T_natural);
double rad_per_second_to_natural(double omega);  // -> eV
double natural_to_rad_per_second(double omega);
double meter_to_natural(double length_m);        // -> eV^-1
double natural_to_meter(double length_natural);
double micrometer_to_natural(double length_um);
double natural_to_micrometer(double length_natural);

// Output conversions for the derived quantities reported by the CLI.
double energy_per_area_to_si(double f_natural);   // eV^3  -> J/m^2
double pressure_to_si(double p_natural);          // eV^4  -> Pa
double entropy_per_area_to_si(double s_natural);  // eV^2  -> J/(m^2 K)

// Characteristic temperature of the gap, T_eff = 1/(2a) in natural units
// (hbar*c/(2*a*k_B) in lab units).  Requires a > 0.
double effective_temperature(double a_natural);

}  // namespace units
}  // namespace casimir
