#pragma once

#include <vector>

#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"

// Closed-form low-temperature physics for Drude metals: the perturbative
// free-energy expansion in the three small parameters T/T_eff, nu/omega_p
// and lambda_p/(2*pi*a), the zero-temperature entropy it implies, and the
// Bose-factor tail integrals appearing in the relaxation series.

namespace casimir {

// integral_x^inf dy/(e^y - 1) = -ln(1 - e^-x).  Requires x > 0 (divergent
// at x = 0).
double bose_tail_1(double x);

// integral_x^inf y^2 dy/(e^y - 1) = sum_{n>=1} e^{-nx}(x^2/n + 2x/n^2 +
// 2/n^3), summed until the term falls below 1e-16 of the partial sum.
// Requires x >= 0; bose_tail_2(0) = 2*zeta(3).
double bose_tail_2(double x);

struct AsymptoticExpansion {
  double F_total = 0.0;      // sum of the five terms below, eV^3
  double term_static = 0.0;  // zero-temperature Casimir energy bracket, < 0
  double term_T3 = 0.0;      // cubic thermal correction, < 0
  double term_T4 = 0.0;      // quartic thermal correction, > 0
  double term_linear = 0.0;  // linear-in-T term (zero-mode defect), > 0
  double term_nu_series = 0.0;  // relaxation (dissipation) series, >= 0

  struct Validity {
    double T_over_T_eff = 0.0;
    double nu_over_omega_p = 0.0;
    double lambda_p_over_2pi_a = 0.0;
  } validity;
};

// Perturbative free energy for a Drude metal, valid for T/T_eff < 0.2,
// nu(T)/omega_p < 1e-2 and lambda_p/(2*pi*a) < 0.2; for T > 0 the
// relaxation must also satisfy nu(T) < 0.1 * 2*pi*T (first Matsubara
// frequency dominates the relaxation).  T = 0 is allowed and leaves only
// the static term.  Violated validity conditions are rejected by name.
AsymptoticExpansion asymptotic_free_energy(const Geometry& geom, double T,
                                           const DrudeParams& drude);

// Zero-temperature entropy limit implied by the linear term of the
// expansion; negative on its whole validity domain lambda_p/(2*pi*a) < 0.2.
double zero_temperature_entropy(const Geometry& geom,
                                const DrudeParams& drude);

struct AsymptoticsComparison {
  double T = 0.0;         // natural units
  double F_direct = 0.0;  // full Matsubara-sum evaluation
  double F_asym = 0.0;    // perturbative expansion
  double rel_diff = 0.0;  // |F_direct - F_asym| / |F_direct|
};

// Cross-validates the direct numerical free energy against the expansion
// at each temperature in T_list (all must satisfy the expansion's
// validity conditions).
std::vector<AsymptoticsComparison> validate_asymptotics(
    const Geometry& geom, const DrudeParams& drude,
    const std::vector<double>& T_list, double rel_tol = 1e-9);

}  // namespace casimir
