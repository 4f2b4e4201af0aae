#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "casimir/asymptotics.hpp"
#include "casimir/errors.hpp"
#include "casimir/presets.hpp"
#include "casimir/thermo.hpp"
#include "casimir/units.hpp"

using namespace casimir;

namespace {
bool rel_close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::fabs(b);
}

const double kA1um = units::micrometer_to_natural(1.0);
const double kZ3 = 1.2020569031595943;
const double kPiV = units::kPi;
}  // namespace

TEST_CASE("ideal-metal entropy matches the analytic low-temperature slope") {
  // F = F0 - z3 T^3/(2 pi) + pi^2 a T^4/45 at T << T_eff, so
  // S = 3 z3 T^2/(2 pi) - 4 pi^2 a T^3/45 up to exponentially small terms.
  const Geometry geom{kA1um};
  const double T = geom.effective_temperature() / 10.0;
  const EntropyResult r = entropy(geom, T, MaterialResponse::ideal_metal(), 1e-10);
  const double analytic =
      3.0 * kZ3 * T * T / (2.0 * kPiV) - 4.0 * kPiV * kPiV * kA1um * T * T * T / 45.0;
  CHECK(std::fabs(r.S - analytic) <=
        r.richardson_error + 1e-9 * std::fabs(analytic));
  CHECK(r.S > 0.0);
  CHECK(r.step_used > 0.0);
}

TEST_CASE("ideal-metal entropy is nonnegative over the full range") {
  const Geometry geom{kA1um};
  const MaterialResponse ideal = MaterialResponse::ideal_metal();
  for (double T_K : {1.0, 3.0, 10.0, 30.0, 100.0, 300.0, 600.0, 1200.0}) {
    const EntropyResult r = entropy(geom, units::kelvin_to_natural(T_K), ideal, 1e-9);
    CHECK(r.S >= -3.0 * r.richardson_error);
  }
}

TEST_CASE("impedance entropy at 5 K is nonnegative and tiny") {
  const Geometry geom{kA1um};
  const EntropyResult r = entropy(geom, units::kelvin_to_natural(5.0),
                                  material_from_preset("gold-impedance-IR"), 1e-9);
  const double eq5_scale = std::fabs(
      -0.023914162251948146 / (kA1um * kA1um) * 0.91806770308730052);
  CHECK(r.S >= -3.0 * r.richardson_error);
  CHECK(std::fabs(r.S) < 0.05 * eq5_scale);
}

TEST_CASE("Drude entropy is negative at low temperature") {
  const Geometry geom{kA1um};
  const EntropyResult r = entropy(geom, units::kelvin_to_natural(50.0),
                                  material_from_preset("gold-paper-drude"), 1e-9);
  CHECK(r.S < 0.0);
  CHECK(std::fabs(r.S) > 10.0 * r.richardson_error);  // decisively negative
}

TEST_CASE("entropy rejects invalid temperatures") {
  const Geometry geom{kA1um};
  CHECK_THROWS_AS(entropy(geom, 0.0, MaterialResponse::ideal_metal(), 1e-9),
                  std::invalid_argument);
  CHECK_THROWS_AS(entropy(geom, -1.0, MaterialResponse::ideal_metal(), 1e-9),
                  std::invalid_argument);
}

TEST_CASE("pressure recovers the quantum and classical limits") {
  const Geometry geom{kA1um};
  const MaterialResponse ideal = MaterialResponse::ideal_metal();

  const double T_cold = geom.effective_temperature() / 100.0;
  const PressureResult cold = pressure(geom, T_cold, ideal, 1e-10);
  CHECK(rel_close(cold.P, -6.2349702378196061e-5, 5e-6));

  const double T_hot = 20.0 * geom.effective_temperature();
  const PressureResult hot = pressure(geom, T_hot, ideal, 1e-10);
  const double classical = -kZ3 * T_hot / (4.0 * kPiV * kA1um * kA1um * kA1um);
  CHECK(rel_close(hot.P, classical, 1e-5));
}

TEST_CASE("pressure is attractive and weakens with distance") {
  const double T = units::kelvin_to_natural(300.0);
  const MaterialResponse gold = material_from_preset("gold-paper-drude");
  double prev_mag = 1e300;
  for (double a_um : {0.5, 1.0, 2.0}) {
    const Geometry geom{units::micrometer_to_natural(a_um)};
    const PressureResult r = pressure(geom, T, gold, 1e-9);
    CHECK(r.P < 0.0);
    CHECK(std::fabs(r.P) < prev_mag);
    prev_mag = std::fabs(r.P);
  }
}

TEST_CASE("cold ideal-metal pressure follows the inverse fourth power") {
  const double T = units::kelvin_to_natural(1.0);
  const MaterialResponse ideal = MaterialResponse::ideal_metal();
  double first = 0.0;
  for (double a_um : {0.5, 1.0, 2.0}) {
    const double a = units::micrometer_to_natural(a_um);
    const PressureResult r = pressure(Geometry{a}, T, ideal, 1e-10);
    const double scaled = r.P * a * a * a * a;
    if (first == 0.0) {
      first = scaled;
    } else {
      CHECK(rel_close(scaled, first, 1e-3));
    }
  }
}

TEST_CASE("plasma binds more strongly than Drude at every separation") {
  const double T = units::kelvin_to_natural(300.0);
  const MaterialResponse drude = material_from_preset("gold-paper-drude");
  const MaterialResponse plasma = material_from_preset("gold-paper-plasma");
  for (double a_um : {0.5, 1.0, 2.5}) {
    const Geometry geom{units::micrometer_to_natural(a_um)};
    const double p_drude = pressure(geom, T, drude, 1e-9).P;
    const double p_plasma = pressure(geom, T, plasma, 1e-9).P;
    CHECK(std::fabs(p_plasma) > std::fabs(p_drude));
  }
}

TEST_CASE("Nernst extrapolation separates the model classes") {
  const Geometry geom{kA1um};
  const std::vector<double> T_seq = {
      units::kelvin_to_natural(30.0), units::kelvin_to_natural(20.0),
      units::kelvin_to_natural(10.0), units::kelvin_to_natural(5.0)};
  const double eq5 =
      -0.023914162251948146 / (kA1um * kA1um) * 0.91806770308730052;

  const NernstResult drude =
      nernst_limit(geom, material_from_preset("gold-paper-drude"), T_seq, 1e-9);
  CHECK(drude.S0 < 0.0);
  CHECK(rel_close(drude.S0, eq5, 0.05));
  CHECK(drude.fit_error < 0.05 * std::fabs(eq5));

  const NernstResult imp =
      nernst_limit(geom, material_from_preset("gold-impedance-IR"), T_seq, 1e-9);
  CHECK(std::fabs(imp.S0) < 0.05 * std::fabs(eq5));

  const NernstResult plasma =
      nernst_limit(geom, material_from_preset("gold-paper-plasma"), T_seq, 1e-9);
  CHECK(std::fabs(plasma.S0) < 0.05 * std::fabs(eq5));
}

TEST_CASE("Nernst preconditions") {
  const Geometry geom{kA1um};
  const MaterialResponse ideal = MaterialResponse::ideal_metal();
  auto K = [](double T_K) { return units::kelvin_to_natural(T_K); };

  // Too few points.
  CHECK_THROWS_AS(nernst_limit(geom, ideal, {K(30), K(20), K(10)}, 1e-9),
                  std::invalid_argument);
  // Not strictly decreasing.
  CHECK_THROWS_AS(nernst_limit(geom, ideal, {K(30), K(30), K(10), K(5)}, 1e-9),
                  std::invalid_argument);
  // Above the low-temperature window T_eff/20 = 57.2 K; message names Kelvin.
  try {
    nernst_limit(geom, ideal, {K(80), K(20), K(10), K(5)}, 1e-9);
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find(" K ") != std::string::npos);
  }
  // Dirty Drude metal: residual relaxation swamps the first Matsubara
  // frequency at 5 K; rejection names the offending temperature.
  DrudeParams dirty;
  dirty.omega_p = 9.0;
  dirty.relaxation.nu_ref = 0.035;
  dirty.relaxation.T_ref = K(300);
  dirty.relaxation.theta_debye = K(175);
  dirty.relaxation.nu_residual = 0.01;
  try {
    nernst_limit(geom, MaterialResponse::drude(dirty),
                 {K(30), K(20), K(10), K(5)}, 1e-9);
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("relaxation") != std::string::npos);
  }
}

TEST_CASE("temperature grid is hybrid log-linear") {
  auto K = [](double T_K) { return units::kelvin_to_natural(T_K); };
  auto in_K = [](double T) { return units::natural_to_kelvin(T); };

  const std::vector<double> grid = temperature_grid(K(1.0), K(1200.0), 60);
  REQUIRE(static_cast<int>(grid.size()) == 60);
  CHECK(rel_close(in_K(grid.front()), 1.0, 1e-12));
  CHECK(rel_close(in_K(grid.back()), 1200.0, 1e-12));
  for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);

  // Low segment log-spaced: constant ratio; high segment linear: constant
  // difference.
  const std::vector<double> low = temperature_grid(K(1.0), K(40.0), 16);
  for (std::size_t i = 2; i < low.size(); ++i) {
    CHECK(rel_close(low[i] / low[i - 1], low[1] / low[0], 1e-9));
  }
  const std::vector<double> high = temperature_grid(K(100.0), K(1200.0), 12);
  for (std::size_t i = 2; i < high.size(); ++i) {
    CHECK(rel_close(high[i] - high[i - 1], high[1] - high[0], 1e-9));
  }

  CHECK_THROWS_AS(temperature_grid(K(10.0), K(5.0), 8), std::invalid_argument);
  CHECK_THROWS_AS(temperature_grid(0.0, K(5.0), 8), std::invalid_argument);
}

TEST_CASE("monotonicity classification by model") {
  const Geometry geom{kA1um};
  const std::pair<double, double> range{units::kelvin_to_natural(1.0),
                                        units::kelvin_to_natural(1200.0)};

  const MonotonicityReport ideal = classify_monotonicity(
      geom, MaterialResponse::ideal_metal(), range, 32, 1e-9);
  CHECK(ideal.classification == Monotonicity::MonotoneIncreasingMagnitude);
  CHECK(ideal.turning_points.empty());
  CHECK(ideal.n_samples == 32);

  const MonotonicityReport drude = classify_monotonicity(
      geom, material_from_preset("gold-paper-drude"), range, 60, 1e-9);
  CHECK(drude.classification == Monotonicity::NonMonotonic);
  REQUIRE(!drude.turning_points.empty());
  // |P| decreases from the window edge and recovers around ~900 K: the
  // last reversal sits in the upper half of the window.
  const double last_K = units::natural_to_kelvin(drude.turning_points.back());
  CHECK(last_K > 500.0);
  CHECK(last_K < 1150.0);
}

TEST_CASE("classification is stable under sample doubling") {
  const Geometry geom{kA1um};
  const std::pair<double, double> range{units::kelvin_to_natural(1.0),
                                        units::kelvin_to_natural(1200.0)};
  const MonotonicityReport a = classify_monotonicity(
      geom, MaterialResponse::ideal_metal(), range, 32, 1e-9);
  const MonotonicityReport b = classify_monotonicity(
      geom, MaterialResponse::ideal_metal(), range, 64, 1e-9);
  CHECK(a.classification == b.classification);
}

TEST_CASE("classification input validation") {
  const Geometry geom{kA1um};
  const MaterialResponse ideal = MaterialResponse::ideal_metal();
  auto K = [](double T_K) { return units::kelvin_to_natural(T_K); };
  CHECK_THROWS_AS(
      classify_monotonicity(geom, ideal, {K(1.0), K(1200.0)}, 8, 1e-9),
      std::invalid_argument);
  CHECK_THROWS_AS(
      classify_monotonicity(geom, ideal, {K(1.0), K(2500.0)}, 32, 1e-9),
      std::invalid_argument);
  CHECK_THROWS_AS(
      classify_monotonicity(geom, ideal, {K(100.0), K(10.0)}, 32, 1e-9),
      std::invalid_argument);
}
