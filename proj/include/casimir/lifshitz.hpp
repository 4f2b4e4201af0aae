#pragma once

#include "casimir/materials.hpp"

// Free energy per unit area between two identical plane-parallel
// semispaces at temperature T, computed as a Matsubara sum over imaginary
// frequencies zeta_m = 2*pi*m*T of momentum integrals over the two
// polarization channels.  Everything is in natural units (eV powers).

namespace casimir {

struct Geometry {
  double a = 0.0;  // plate separation, eV^-1

  // Characteristic temperature 1/(2a) separating the quantum (T << T_eff)
  // and classical (T >> T_eff) regimes.
  double effective_temperature() const;
};

struct MatsubaraGrid {
  double T = 0.0;  // temperature, eV

  double zeta(int m) const;  // 2*pi*m*T
  // Dimensionless lower integration limit 2*a*zeta_m of mode m.
  double zeta_tilde(int m, double a) const;
};

// Squared reflection coefficients for a dielectric described by its
// permittivity eps = eps(i*zeta) evaluated at the Matsubara frequency.
// q is the momentum-like integration variable with q >= zeta on the
// physical domain.  "tm" is the transverse magnetic channel, "te" the
// transverse electric one.
double reflection_tm(double zeta, double q, double eps);
double reflection_te(double zeta, double q, double eps);

// Same, for a surface described by its impedance Z = Z(i*zeta).
double reflection_tm_impedance(double zeta, double q, double Z);
double reflection_te_impedance(double zeta, double q, double Z);

struct ModeIntegral {
  double value = 0.0;      // the mode's momentum integral, eV^2
  double abs_error = 0.0;  // quadrature + upper-truncation error bound
};

// Momentum integral of Matsubara mode m (m = 0 uses the analytic
// zero-frequency coefficients).  rel_tol must lie in (1e-14, 1e-2).
ModeIntegral mode_integral(int m, const MatsubaraGrid& grid,
                           const Geometry& geom,
                           const MaterialResponse& material, double rel_tol);

struct FreeEnergyResult {
  double F = 0.0;          // free energy per unit area, eV^3 (negative)
  double abs_error = 0.0;  // estimated total error, >= tail_bound
  int m_used = 0;          // number of Matsubara terms summed (incl. m = 0)
  double tail_bound = 0.0; // bound on the truncated remainder of the sum
};

// Full Lifshitz free energy per unit area.  Requires geom.a > 0, T > 0 and
// rel_tol in (1e-14, 1e-2).  Throws NumericsError if the Matsubara sum or a
// mode integral cannot converge within budget.
FreeEnergyResult free_energy(const Geometry& geom, double T,
                             const MaterialResponse& material,
                             double rel_tol = 1e-9);

// Deliberately independent cross-check: fixed-step composite Simpson
// integration on a long truncated interval with a fixed mode cutoff, sharing
// no quadrature machinery with free_energy().  Slow; intended for tests.
FreeEnergyResult brute_force_free_energy(const Geometry& geom, double T,
                                         const MaterialResponse& material);

}  // namespace casimir
