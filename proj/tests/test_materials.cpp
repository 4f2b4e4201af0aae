#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "casimir/materials.hpp"
#include "casimir/units.hpp"

using namespace casimir;

namespace {
bool rel_close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::fabs(b);
}

RelaxationModel gold_relaxation() {
  RelaxationModel m;
  m.nu_ref = 0.035;  // eV at room temperature
  m.T_ref = units::kelvin_to_natural(300.0);
  m.theta_debye = units::kelvin_to_natural(175.0);
  m.nu_residual = 0.0;
  return m;
}
}  // namespace

TEST_CASE("Bloch-Gruneisen shape function limits") {
  // Deep quantum regime: G(t) -> t^5 * (full integral) = t^5 * 120*zeta(5).
  CHECK(rel_close(bloch_gruneisen_shape(1e-3), 1e-15 * 124.43133061720439, 1e-8));
  // Classical regime: G(t) -> t/4.
  CHECK(rel_close(bloch_gruneisen_shape(100.0), 25.0, 1e-4));
  // T^5 scaling: doubling t multiplies G by 32 while 2t stays <= 1/60.
  CHECK(rel_close(bloch_gruneisen_shape(0.01) / bloch_gruneisen_shape(0.005),
                  32.0, 1e-6));
  // Linear scaling at high t within one percent.
  CHECK(rel_close(bloch_gruneisen_shape(8.0) / bloch_gruneisen_shape(4.0), 2.0,
                  1e-2));
  CHECK_THROWS_AS(bloch_gruneisen_shape(0.0), std::invalid_argument);
}

TEST_CASE("relaxation frequency pins its anchors") {
  RelaxationModel m = gold_relaxation();
  CHECK(bloch_gruneisen_nu(0.0, m) == 0.0);  // no residual scattering
  CHECK(rel_close(bloch_gruneisen_nu(m.T_ref, m), m.nu_ref, 1e-12));

  m.nu_residual = 1e-4;
  CHECK(bloch_gruneisen_nu(0.0, m) == m.nu_residual);
  CHECK(rel_close(bloch_gruneisen_nu(m.T_ref, m), m.nu_ref + m.nu_residual, 1e-12));

  // Monotone increasing in T.
  double prev = 0.0;
  for (double T_K : {1.0, 10.0, 50.0, 150.0, 300.0, 900.0}) {
    const double nu = bloch_gruneisen_nu(units::kelvin_to_natural(T_K), m);
    CHECK(nu > prev);
    prev = nu;
  }
  CHECK_THROWS_AS(bloch_gruneisen_nu(-1.0, m), std::invalid_argument);
}

TEST_CASE("Drude permittivity on the imaginary axis") {
  DrudeParams p;
  p.omega_p = 9.0;
  p.relaxation = gold_relaxation();
  const double T = units::kelvin_to_natural(300.0);
  const double nu = bloch_gruneisen_nu(T, p.relaxation);
  for (double zeta : {1e-4, 1e-2, 1.0, 30.0}) {
    const double expected = 1.0 + p.omega_p * p.omega_p / (zeta * (zeta + nu));
    CHECK(rel_close(drude_permittivity(zeta, p, T), expected, 1e-13));
    CHECK(drude_permittivity(zeta, p, T) >= 1.0);
  }
  // Losing the relaxation (plasma model) only increases the response.
  const MaterialResponse plasma = MaterialResponse::plasma(9.0);
  CHECK(plasma.permittivity(0.5, T) == 1.0 + 81.0 / 0.25);
  CHECK(plasma.permittivity(0.5, T) > drude_permittivity(0.5, p, T));
}

TEST_CASE("surface impedance models") {
  const MaterialResponse ir = MaterialResponse::infrared_optics(9.0);
  for (double zeta : {1e-3, 0.1, 3.0, 100.0}) {
    const double expected = zeta / std::sqrt(zeta * zeta + 81.0);
    CHECK(rel_close(ir.impedance(zeta), expected, 1e-14));
    CHECK(ir.impedance(zeta) > 0.0);
    CHECK(ir.impedance(zeta) < 1.0);
  }
  const MaterialResponse pl = MaterialResponse::power_law_impedance(1.0, 0.5);
  CHECK(rel_close(pl.impedance(0.25), 0.5, 1e-14));
  CHECK(pl.impedance(4.0) == 1.0);   // capped at the vacuum value
  CHECK(pl.impedance(100.0) == 1.0);
}

TEST_CASE("factories validate their parameters") {
  CHECK_THROWS_AS(MaterialResponse::constant_eps(1.0), std::invalid_argument);
  CHECK_THROWS_AS(MaterialResponse::constant_eps(0.5), std::invalid_argument);
  CHECK_THROWS_AS(MaterialResponse::plasma(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(MaterialResponse::infrared_optics(0.0), std::invalid_argument);
  CHECK_THROWS_AS(MaterialResponse::power_law_impedance(0.0, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(MaterialResponse::power_law_impedance(1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(MaterialResponse::power_law_impedance(1.0, 0.0),
                  std::invalid_argument);

  const MaterialResponse mica = MaterialResponse::constant_eps(7.0);
  CHECK(mica.eps_value() == 7.0);
  CHECK_THROWS_AS(mica.omega_p(), std::invalid_argument);
  CHECK_THROWS_AS(mica.impedance(1.0), std::invalid_argument);
  CHECK_THROWS_AS(MaterialResponse::ideal_metal().permittivity(1.0, 1.0),
                  std::invalid_argument);
  CHECK(!mica.describe().empty());
}

TEST_CASE("zero-frequency coefficients by model") {
  const double q = 0.7;

  DrudeParams p;
  p.omega_p = 9.0;
  p.relaxation = gold_relaxation();
  const ZeroModeCoefficients drude =
      MaterialResponse::drude(p).zero_mode(q);
  CHECK(drude.A0 == 1.0);
  CHECK(drude.B0 == 0.0);  // the electric zero mode vanishes with relaxation

  const ZeroModeCoefficients ideal =
      MaterialResponse::ideal_metal().zero_mode(q);
  CHECK(ideal.A0 == 1.0);
  CHECK(ideal.B0 == 1.0);

  // Plasma keeps a finite electric zero mode; at q = omega_p its value is
  // ((sqrt(2)-1)/(sqrt(2)+1))^2 = (sqrt(2)-1)^4.
  const ZeroModeCoefficients plasma =
      MaterialResponse::plasma(9.0).zero_mode(9.0);
  CHECK(plasma.A0 == 1.0);
  CHECK(rel_close(plasma.B0, 0.029437251522859414, 1e-14));

  const ZeroModeCoefficients mica =
      MaterialResponse::constant_eps(7.0).zero_mode(q);
  CHECK(mica.A0 == 0.5625);  // ((7-1)/(7+1))^2
  CHECK(mica.B0 == 0.0);

  const ZeroModeCoefficients ir =
      MaterialResponse::infrared_optics(9.0).zero_mode(3.0);
  CHECK(ir.A0 == 1.0);
  CHECK(ir.B0 == 0.25);  // ((9-3)/(9+3))^2

  const ZeroModeCoefficients pl =
      MaterialResponse::power_law_impedance(0.02, 0.5).zero_mode(q);
  CHECK(pl.A0 == 1.0);
  CHECK(pl.B0 == 1.0);  // sublinear impedance restores the ideal value

  CHECK(zero_mode_coefficients(q, MaterialResponse::ideal_metal()).B0 == 1.0);
}
