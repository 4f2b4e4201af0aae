#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "casimir/units.hpp"

using namespace casimir;
using namespace casimir::units;

namespace {
bool rel_close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::fabs(b);
}
}  // namespace

TEST_CASE("fundamental constants in electronvolt units") {
  CHECK(rel_close(kHbar_eV_s, 6.5821195695090657e-16, 1e-14));
  CHECK(rel_close(kHbarC_eV_m * 1e9, 197.32698045930247, 1e-14));
  CHECK(rel_close(kBoltzmann_eV_K, 8.6173332621451774e-5, 1e-14));
  CHECK(rel_close(kZeta3, 1.2020569031595943, 1e-15));
  CHECK(kPlanck_J_s == 6.62607015e-34);  // defining value, exact
  CHECK(kBoltzmann_J_K == 1.380649e-23);
  CHECK(kElementaryCharge_C == 1.602176634e-19);
}

TEST_CASE("temperature and length conversions round-trip") {
  for (double T_K : {1.0, 77.0, 300.0, 1200.0}) {
    CHECK(rel_close(natural_to_kelvin(kelvin_to_natural(T_K)), T_K, 1e-14));
  }
  for (double um : {0.2, 1.0, 5.0}) {
    CHECK(rel_close(natural_to_micrometer(micrometer_to_natural(um)), um, 1e-14));
  }
  CHECK(rel_close(kelvin_to_natural(300.0), 300.0 * 8.6173332621451774e-5, 1e-14));
  CHECK(rel_close(micrometer_to_natural(1.0), 5.0677307161563958, 1e-14));
  CHECK(rel_close(meter_to_natural(1e-6), micrometer_to_natural(1.0), 1e-15));
}

TEST_CASE("angular frequency conversion") {
  // 5.32e13 rad/s is a typical metal relaxation frequency.
  CHECK(rel_close(rad_per_second_to_natural(5.32e13) * 1e3, 35.01687610978823, 1e-13));
  CHECK(rel_close(natural_to_rad_per_second(rad_per_second_to_natural(1e15)), 1e15, 1e-14));
}

TEST_CASE("effective temperature of a one-micrometer gap") {
  const double a = micrometer_to_natural(1.0);
  CHECK(rel_close(effective_temperature(a), 0.098663490229651233, 1e-14));
  CHECK(rel_close(natural_to_kelvin(effective_temperature(a)), 1144.9422603053673, 1e-13));
}

TEST_CASE("SI output conversions") {
  CHECK(rel_close(energy_per_area_to_si(-1.0813280903179177e-4),
                  -4.4493332821712748e-10, 1e-13));
  CHECK(rel_close(pressure_to_si(1.0), 20.852156845243012, 1e-13));
  CHECK(rel_close(entropy_per_area_to_si(-8.5487540316022292e-4),
                  -3.0311900291852651e-13, 1e-13));
}

TEST_CASE("dimension-checked quantities reject mismatched units") {
  const Quantity T = from_si(300.0, Unit::Kelvin);
  CHECK(T.dim == Dimension::Energy);
  CHECK(rel_close(to_si(T, Unit::Kelvin), 300.0, 1e-14));
  CHECK_THROWS_AS(to_si(T, Unit::Meter), std::invalid_argument);

  const Quantity a = from_si(1.0, Unit::Micrometer);
  CHECK(a.dim == Dimension::Length);
  CHECK(rel_close(to_si(a, Unit::Nanometer), 1000.0, 1e-13));
  CHECK_THROWS_AS(to_si(a, Unit::eV), std::invalid_argument);
}
