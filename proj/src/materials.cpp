#include "casimir/materials.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

void validate_relaxation(const RelaxationModel& model) {
  require(model.nu_ref > 0.0 && std::isfinite(model.nu_ref),
          "relaxation nu_ref must be positive");
  require(model.T_ref > 0.0 && std::isfinite(model.T_ref),
          "relaxation T_ref must be positive");
  require(model.theta_debye > 0.0 && std::isfinite(model.theta_debye),
          "relaxation Debye temperature must be positive");
  require(model.nu_residual >= 0.0 && std::isfinite(model.nu_residual),
          "relaxation nu_residual must be non-negative");
}

// x^5 e^x / (e^x - 1)^2 evaluated without overflow; ~x^3 as x -> 0.
double bg_integrand(double x) {
  const double em = -std::expm1(-x);  // 1 - e^-x, accurate for small x
  if (em == 0.0) return 0.0;
  const double x2 = x * x;
  return x2 * x2 * x * std::exp(-x) / (em * em);
}

}  // namespace

double bloch_gruneisen_shape(double t) {
  require(t > 0.0 && std::isfinite(t),
          "Bloch-Gruneisen argument must be positive");
  // The integrand decays like x^5 e^-x; beyond x = 60 the remainder is
  // below 1e-17 of the full integral, so cap the upper limit there.
  const double upper = std::min(1.0 / t, 60.0);
  const QuadratureResult integral =
      integrate(bg_integrand, 0.0, upper, 1e-9, 1e-300);
  const double t2 = t * t;
  return t2 * t2 * t * integral.value;
}

double bloch_gruneisen_nu(double T, const RelaxationModel& model) {
  validate_relaxation(model);
  require(T >= 0.0 && std::isfinite(T), "temperature must be non-negative");
  if (T == 0.0) return model.nu_residual;
  const double shape_T = bloch_gruneisen_shape(T / model.theta_debye);
  const double shape_ref =
      bloch_gruneisen_shape(model.T_ref / model.theta_debye);
  return model.nu_residual + model.nu_ref * shape_T / shape_ref;
}

double DrudeParams::plasma_wavelength() const {
  require(omega_p > 0.0, "plasma frequency must be positive");
  return 2.0 * units::kPi / omega_p;
}

double drude_permittivity(double zeta, const DrudeParams& params, double T) {
  require(zeta > 0.0 && std::isfinite(zeta),
          "imaginary frequency must be positive; the zero-frequency term "
          "uses the analytic zero-mode coefficients");
  const double nu = bloch_gruneisen_nu(T, params.relaxation);
  return 1.0 + params.omega_p * params.omega_p / (zeta * (zeta + nu));
}

MaterialResponse MaterialResponse::drude(const DrudeParams& params) {
  require(params.omega_p > 0.0 && std::isfinite(params.omega_p),
          "plasma frequency must be positive");
  validate_relaxation(params.relaxation);
  MaterialResponse m;
  m.kind_ = MaterialKind::Drude;
  m.drude_ = params;
  m.omega_p_ = params.omega_p;
  return m;
}

MaterialResponse MaterialResponse::plasma(double omega_p) {
  require(omega_p > 0.0 && std::isfinite(omega_p),
          "plasma frequency must be positive");
  MaterialResponse m;
  m.kind_ = MaterialKind::Plasma;
  m.omega_p_ = omega_p;
  return m;
}

MaterialResponse MaterialResponse::constant_eps(double eps) {
  require(eps > 1.0 && std::isfinite(eps),
          "constant permittivity must exceed 1");
  MaterialResponse m;
  m.kind_ = MaterialKind::ConstantEps;
  m.eps_ = eps;
  return m;
}

MaterialResponse MaterialResponse::ideal_metal() {
  MaterialResponse m;
  m.kind_ = MaterialKind::IdealMetal;
  return m;
}

MaterialResponse MaterialResponse::infrared_optics(double omega_p) {
  require(omega_p > 0.0 && std::isfinite(omega_p),
          "plasma frequency must be positive");
  MaterialResponse m;
  m.kind_ = MaterialKind::InfraredOptics;
  m.omega_p_ = omega_p;
  return m;
}

MaterialResponse MaterialResponse::power_law_impedance(double prefactor,
                                                       double exponent) {
  require(prefactor > 0.0 && std::isfinite(prefactor),
          "impedance prefactor must be positive");
  require(exponent > 0.0 && exponent < 1.0,
          "impedance exponent must lie in (0, 1)");
  MaterialResponse m;
  m.kind_ = MaterialKind::PowerLawImpedance;
  m.prefactor_ = prefactor;
  m.exponent_ = exponent;
  return m;
}

double MaterialResponse::permittivity(double zeta, double T) const {
  switch (kind_) {
    case MaterialKind::Drude:
      return drude_permittivity(zeta, drude_, T);
    case MaterialKind::Plasma:
      require(zeta > 0.0 && std::isfinite(zeta),
              "imaginary frequency must be positive");
      return 1.0 + omega_p_ * omega_p_ / (zeta * zeta);
    case MaterialKind::ConstantEps:
      require(zeta > 0.0 && std::isfinite(zeta),
              "imaginary frequency must be positive");
      return eps_;
    case MaterialKind::IdealMetal:
      throw std::invalid_argument(
          "ideal metal has no finite permittivity; its reflection "
          "coefficients are identically 1");
    case MaterialKind::InfraredOptics:
    case MaterialKind::PowerLawImpedance:
      throw std::invalid_argument(
          "impedance-type material has no permittivity; use impedance()");
  }
  throw std::logic_error("unreachable material kind");
}

double MaterialResponse::impedance(double zeta) const {
  require(zeta > 0.0 && std::isfinite(zeta),
          "imaginary frequency must be positive; the zero-frequency term "
          "uses the analytic zero-mode coefficients");
  switch (kind_) {
    case MaterialKind::InfraredOptics:
      return zeta / std::sqrt(zeta * zeta + omega_p_ * omega_p_);
    case MaterialKind::PowerLawImpedance:
      // The power law is a low-frequency regime model; cap at the vacuum
      // value so the impedance stays physical if evaluated far outside it.
      return std::min(prefactor_ * std::pow(zeta, exponent_), 1.0);
    default:
      throw std::invalid_argument(
          "dielectric-type material has no surface impedance; use "
          "permittivity()");
  }
}

ZeroModeCoefficients MaterialResponse::zero_mode(double q) const {
  require(q > 0.0 && std::isfinite(q),
          "transverse momentum must be positive");
  switch (kind_) {
    case MaterialKind::Drude:
      // eps ~ omega_p^2/(nu*zeta) diverges slower than 1/zeta^2: the
      // magnetic mode keeps full reflection, the electric mode decouples.
      return {1.0, 0.0};
    case MaterialKind::Plasma: {
      const double root = std::sqrt(q * q + omega_p_ * omega_p_);
      const double r = (root - q) / (root + q);
      return {1.0, r * r};
    }
    case MaterialKind::ConstantEps: {
      const double r = (eps_ - 1.0) / (eps_ + 1.0);
      return {r * r, 0.0};
    }
    case MaterialKind::IdealMetal:
      return {1.0, 1.0};
    case MaterialKind::InfraredOptics: {
      // Z -> zeta/omega_p vanishes linearly, which keeps both modes
      // reflecting; the electric mode retains a q-dependent coefficient.
      const double r = (omega_p_ - q) / (omega_p_ + q);
      return {1.0, r * r};
    }
    case MaterialKind::PowerLawImpedance:
      // Z -> 0 sublinearly (exponent < 1), so Z*q still dominates zeta in
      // the electric mode and both coefficients saturate at 1.
      return {1.0, 1.0};
  }
  throw std::logic_error("unreachable material kind");
}

const DrudeParams& MaterialResponse::drude_params() const {
  if (kind_ != MaterialKind::Drude) {
    throw std::invalid_argument("material is not a Drude metal");
  }
  return drude_;
}

double MaterialResponse::omega_p() const {
  switch (kind_) {
    case MaterialKind::Drude:
    case MaterialKind::Plasma:
    case MaterialKind::InfraredOptics:
      return omega_p_;
    default:
      throw std::invalid_argument("material has no plasma frequency");
  }
}

double MaterialResponse::eps_value() const {
  if (kind_ != MaterialKind::ConstantEps) {
    throw std::invalid_argument("material has no constant permittivity");
  }
  return eps_;
}

double MaterialResponse::impedance_prefactor() const {
  if (kind_ != MaterialKind::PowerLawImpedance) {
    throw std::invalid_argument("material has no impedance prefactor");
  }
  return prefactor_;
}

double MaterialResponse::impedance_exponent() const {
  if (kind_ != MaterialKind::PowerLawImpedance) {
    throw std::invalid_argument("material has no impedance exponent");
  }
  return exponent_;
}

std::string MaterialResponse::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case MaterialKind::Drude:
      out << "drude(omega_p=" << omega_p_ << " eV, nu_ref="
          << drude_.relaxation.nu_ref << " eV)";
      break;
    case MaterialKind::Plasma:
      out << "plasma(omega_p=" << omega_p_ << " eV)";
      break;
    case MaterialKind::ConstantEps:
      out << "constant-eps(" << eps_ << ")";
      break;
    case MaterialKind::IdealMetal:
      out << "ideal-metal";
      break;
    case MaterialKind::InfraredOptics:
      out << "infrared-optics(omega_p=" << omega_p_ << " eV)";
      break;
    case MaterialKind::PowerLawImpedance:
      out << "power-law-impedance(" << prefactor_ << ", " << exponent_
          << ")";
      break;
  }
  return out.str();
}

double impedance_on_imaginary_axis(double zeta,
                                   const MaterialResponse& material) {
  return material.impedance(zeta);
}

ZeroModeCoefficients zero_mode_coefficients(
    double q, const MaterialResponse& material) {
  return material.zero_mode(q);
}

}  // namespace casimir
