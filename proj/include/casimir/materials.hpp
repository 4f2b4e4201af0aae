#pragma once

#include <string>

#include "casimir/units.hpp"

// Material response models for the two (identical) plate surfaces,
// evaluated along the imaginary frequency axis.  Dielectric-type models
// provide a permittivity eps(i*zeta) >= 1; impedance-type models provide a
// surface impedance Z(i*zeta) > 0.  All inputs and parameters are in
// natural units (energies in eV).

namespace casimir {

// Temperature-dependent Drude relaxation frequency built from a reference
// measurement plus an optional residual (impurity) floor:
//   nu(T) = nu_residual + nu_ref * G(T/theta) / G(T_ref/theta)
// where G is the Bloch-Gruneisen shape function.  nu(T) ~ T^5 well below
// the Debye temperature theta and ~ T above it.
struct RelaxationModel {
  double nu_ref = 0.0;       // measured relaxation at T_ref, eV
  double T_ref = 0.0;        // reference temperature, eV
  double theta_debye = 0.0;  // Debye temperature, eV
  double nu_residual = 0.0;  // residual relaxation as T -> 0, eV
};

// Bloch-Gruneisen shape function G(t) = t^5 * integral_0^{1/t} of
// x^5 e^x / (e^x - 1)^2 dx.  Requires t > 0.
double bloch_gruneisen_shape(double t);

// nu(T) = nu_residual + nu_ref * G(T/theta)/G(T_ref/theta).  Requires
// T >= 0 (T = 0 returns nu_residual) and a valid model (nu_ref > 0,
// T_ref > 0, theta_debye > 0, nu_residual >= 0).  Nondecreasing in T,
// ~T^5 well below theta_debye and ~T well above it.
double bloch_gruneisen_nu(double T, const RelaxationModel& model);

struct DrudeParams {
  double omega_p = 0.0;  // plasma frequency, eV
  RelaxationModel relaxation;

  // Plasma wavelength 2*pi/omega_p in natural length units (eV^-1).
  double plasma_wavelength() const;
};

enum class MaterialKind {
  Drude,             // eps = 1 + omega_p^2 / (zeta * (zeta + nu(T)))
  Plasma,            // eps = 1 + omega_p^2 / zeta^2 (dissipationless)
  ConstantEps,       // frequency-independent eps > 1
  IdealMetal,        // perfect reflector for both polarizations
  InfraredOptics,    // impedance Z = zeta / sqrt(zeta^2 + omega_p^2)
  PowerLawImpedance  // impedance Z = prefactor * zeta^exponent
};

// Coefficients of the two polarizations in the zero-frequency Matsubara
// term, as analytic zeta -> 0 limits at fixed transverse momentum q.
struct ZeroModeCoefficients {
  double A0 = 0.0;  // transverse magnetic
  double B0 = 0.0;  // transverse electric
};

class MaterialResponse {
 public:
  static MaterialResponse drude(const DrudeParams& params);
  static MaterialResponse plasma(double omega_p);
  static MaterialResponse constant_eps(double eps);
  static MaterialResponse ideal_metal();
  static MaterialResponse infrared_optics(double omega_p);
  static MaterialResponse power_law_impedance(double prefactor,
                                              double exponent);

  MaterialKind kind() const { return kind_; }
  bool is_impedance() const {
    return kind_ == MaterialKind::InfraredOptics ||
           kind_ == MaterialKind::PowerLawImpedance;
  }

  // Permittivity along the imaginary axis for dielectric-type models.
  // T feeds the Drude relaxation and is ignored by the other kinds.
  // Requires zeta > 0; throws for impedance kinds and for IdealMetal
  // (whose reflection coefficients are fixed at 1 without a finite eps).
  double permittivity(double zeta, double T) const;

  // Surface impedance along the imaginary axis for impedance-type models,
  // always in (0, 1].  Requires zeta > 0; throws for dielectric kinds.
  double impedance(double zeta) const;

  // Analytic zero-frequency coefficients at transverse momentum q > 0.
  ZeroModeCoefficients zero_mode(double q) const;

  // Parameter accessors; each throws unless the kind carries the field.
  const DrudeParams& drude_params() const;
  double omega_p() const;          // Drude, Plasma, InfraredOptics
  double eps_value() const;        // ConstantEps
  double impedance_prefactor() const;
  double impedance_exponent() const;

  // Human-readable label such as "drude(omega_p=9 eV)" for diagnostics.
  std::string describe() const;

 private:
  MaterialResponse() = default;

  MaterialKind kind_ = MaterialKind::IdealMetal;
  DrudeParams drude_{};
  double omega_p_ = 0.0;
  double eps_ = 0.0;
  double prefactor_ = 0.0;
  double exponent_ = 0.0;
};

// Free-function forms used by the integration layer.
double drude_permittivity(double zeta, const DrudeParams& params, double T);
double impedance_on_imaginary_axis(double zeta,
                                   const MaterialResponse& material);
ZeroModeCoefficients zero_mode_coefficients(double q,
                                            const MaterialResponse& material);

}  // namespace casimir
