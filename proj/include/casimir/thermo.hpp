#pragma once

#include <utility>
#include <vector>

#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"

// Thermodynamic quantities derived from the free energy by Richardson-
// extrapolated central differences: entropy S = -dF/dT, pressure
// P = -dF/da, a Nernst-limit extrapolation S(T -> 0), and classification
// of |P|(T) curves as monotone or not.

namespace casimir {

struct EntropyResult {
  double S = 0.0;                // entropy per unit area, eV^2
  double T = 0.0;                // evaluation temperature
  double step_used = 0.0;        // finite-difference step in T
  double richardson_error = 0.0; // |S_h - S_{h/2}| / 3, >= 0
};

struct PressureResult {
  double P = 0.0;                // pressure, eV^4 (negative: attraction)
  double a = 0.0;                // evaluation separation
  double step_used = 0.0;        // finite-difference step in a
  double richardson_error = 0.0; // |P_h - P_{h/2}| / 3, >= 0
};

// S(T) by central difference with step h = min(T/4, T_eff/200) and one
// Richardson extrapolation level.  The Drude relaxation nu(T) is
// re-evaluated inside every free-energy call, so its temperature
// dependence is differentiated along with everything else.
EntropyResult entropy(const Geometry& geom, double T,
                      const MaterialResponse& material,
                      double rel_tol = 1e-9);

// P(a) by central difference with step h = a/1000 and one Richardson
// level; negative everywhere (attraction).
PressureResult pressure(const Geometry& geom, double T,
                        const MaterialResponse& material,
                        double rel_tol = 1e-9);

struct NernstResult {
  double S0 = 0.0;         // extrapolated S(T -> 0), eV^2
  double fit_error = 0.0;  // residual norm of the quadratic fit
};

// Extrapolates S(T -> 0) by a least-squares quadratic fit S = S0 + c1*T +
// c2*T^2 over a strictly decreasing sequence of at least four
// temperatures, all below T_eff/20.  For Drude materials every point must
// satisfy nu(T) < 0.1 * 2*pi*T; violations are rejected naming the
// offending temperature.  S0 is the thermodynamic-consistency diagnostic:
// ~0 for models obeying the Nernst heat theorem, negative for Drude.
NernstResult nernst_limit(const Geometry& geom,
                          const MaterialResponse& material,
                          const std::vector<double>& T_sequence,
                          double rel_tol = 1e-9);

enum class Monotonicity { MonotoneIncreasingMagnitude, NonMonotonic };

struct MonotonicityReport {
  Monotonicity classification = Monotonicity::MonotoneIncreasingMagnitude;
  // Temperatures where |P|(T) reverses direction, located to ~1 K.  A
  // reversal already in progress at the window edge reports that edge.
  // Nonempty exactly when classification is NonMonotonic.
  std::vector<double> turning_points;
  std::pair<double, double> scanned_range{0.0, 0.0};
  int n_samples = 0;
};

// Returns the temperature grid used by sweeps and by
// classify_monotonicity: log-spaced below the 50 K crossover (where the
// low-temperature physics lives), linear above it.  Bounds in natural
// units; n >= 2.
std::vector<double> temperature_grid(double T_min, double T_max, int n);

// Samples |P|(T) on the grid above and classifies the curve.  Differences
// count only when they exceed 3x the combined error estimates; if no
// difference is significant the scan is inconclusive and a NumericsError
// asking for a tighter rel_tol is thrown.  Requires n_samples >= 32 and
// T_range within (0, 2000 K].
MonotonicityReport classify_monotonicity(const Geometry& geom,
                                         const MaterialResponse& material,
                                         std::pair<double, double> T_range,
                                         int n_samples,
                                         double rel_tol = 1e-9);

}  // namespace casimir
