#include "casimir/asymptotics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "casimir/quadrature.hpp"
#include "casimir/units.hpp"

namespace casimir {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

double bose_tail_1(double x) {
  require(x > 0.0 && std::isfinite(x),
          "bose_tail_1 requires x > 0 (integral diverges at 0)");
  // Two algebraically equal forms, each accurate where the other loses
  // digits: -ln(-expm1(-x)) for small x, -log1p(-exp(-x)) for large x.
  if (x < 0.5) {
    return -std::log(-std::expm1(-x));
  }
  return -std::log1p(-std::exp(-x));
}

double bose_tail_2(double x) {
  require(x >= 0.0 && std::isfinite(x), "bose_tail_2 requires x >= 0");
  if (x < 1.0) {
    // The series over n decays only algebraically here, so truncating on
    // term size under-counts the tail.  Instead subtract the head of the
    // integral from its full value 2*zeta(3): the integrand t^2/(e^t - 1)
    // is smooth on [0, 1] (it behaves as t near 0).
    if (x == 0.0) return 2.0 * units::kZeta3;
    const auto head = integrate(
        [](double t) { return t == 0.0 ? 0.0 : t * t / std::expm1(t); }, 0.0,
        x, 1e-14, 1e-18);
    return 2.0 * units::kZeta3 - head.value;
  }
  const double x2 = x * x;
  const double decay = std::exp(-x);
  double damp = 1.0;
  double sum = 0.0;
  for (long n = 1;; ++n) {
    damp *= decay;  // e^{-n x}
    const double nd = static_cast<double>(n);
    const double term = damp * (x2 / nd + 2.0 * x / (nd * nd) +
                                2.0 / (nd * nd * nd));
    sum += term;
    // With x >= 1 the remainder is below term/(e^x - 1) <= 0.6 * term.
    if (term < 1e-16 * sum || term == 0.0) break;
  }
  return sum;
}

AsymptoticExpansion asymptotic_free_energy(const Geometry& geom, double T,
                                           const DrudeParams& drude) {
  require(geom.a > 0.0 && std::isfinite(geom.a),
          "plate separation must be positive");
  require(T >= 0.0 && std::isfinite(T), "temperature must be >= 0");
  require(drude.omega_p > 0.0, "plasma frequency must be positive");

  const double a = geom.a;
  const double T_eff = geom.effective_temperature();
  const double lambda_p = drude.plasma_wavelength();
  const double nu = (T > 0.0) ? bloch_gruneisen_nu(T, drude.relaxation)
                              : drude.relaxation.nu_residual;

  const double tau = T / T_eff;
  const double nu_ratio = nu / drude.omega_p;
  const double lam_ratio = lambda_p / (2.0 * units::kPi * a);

  {
    std::ostringstream msg;
    if (!(tau < 0.2)) {
      msg << "expansion validity violated: T/T_eff = " << tau << " >= 0.2";
      throw std::invalid_argument(msg.str());
    }
    if (!(nu_ratio < 1e-2)) {
      msg << "expansion validity violated: nu/omega_p = " << nu_ratio
          << " >= 1e-2";
      throw std::invalid_argument(msg.str());
    }
    if (!(lam_ratio < 0.2)) {
      msg << "expansion validity violated: lambda_p/(2 pi a) = "
          << lam_ratio << " >= 0.2";
      throw std::invalid_argument(msg.str());
    }
    if (T > 0.0 && !(nu < 0.1 * 2.0 * units::kPi * T)) {
      msg << "expansion validity violated: nu(T) = " << nu
          << " is not small against the first Matsubara frequency "
          << 2.0 * units::kPi * T;
      throw std::invalid_argument(msg.str());
    }
  }

  const double pi = units::kPi;
  const double zeta3 = units::kZeta3;
  const double a3 = a * a * a;
  const double x = lambda_p / (pi * a);

  AsymptoticExpansion out;
  out.validity.T_over_T_eff = tau;
  out.validity.nu_over_omega_p = nu_ratio;
  out.validity.lambda_p_over_2pi_a = lam_ratio;

  out.term_static =
      -pi * pi / (720.0 * a3) * (1.0 - 2.0 * x + (18.0 / 5.0) * x * x);

  if (T > 0.0) {
    const double tau3 = tau * tau * tau;
    out.term_T3 = -zeta3 / (16.0 * pi * a3) * (1.0 + x) * tau3;
    out.term_T4 = pi * pi / (720.0 * a3) * (1.0 + 2.0 * x) * tau3 * tau;
    out.term_linear =
        zeta3 * T / (16.0 * pi * a * a) * (1.0 - 2.0 * x + 3.0 * x * x);

    // Relaxation series over the nonzero Matsubara frequencies; each term
    // decays like e^{-zt_m}, so truncate once zt_m exceeds 45.
    double series = 0.0;
    const double delta = 4.0 * pi * a * T;  // zt_m = m * delta
    for (int m = 1;; ++m) {
      const double zt = delta * m;
      if (zt > 45.0) break;
      series += zt * bose_tail_1(zt) + bose_tail_2(zt) / zt;
    }
    out.term_nu_series =
        (nu / drude.omega_p) * T / (4.0 * pi * a * a) * series;
  }

  out.F_total = out.term_static + out.term_T3 + out.term_T4 +
                out.term_linear + out.term_nu_series;
  return out;
}

double zero_temperature_entropy(const Geometry& geom,
                                const DrudeParams& drude) {
  require(geom.a > 0.0 && std::isfinite(geom.a),
          "plate separation must be positive");
  const double a = geom.a;
  const double lambda_p = drude.plasma_wavelength();
  const double pi = units::kPi;
  const double lam_ratio = lambda_p / (2.0 * pi * a);
  if (!(lam_ratio < 0.2)) {
    std::ostringstream msg;
    msg << "validity violated: lambda_p/(2 pi a) = " << lam_ratio
        << " >= 0.2";
    throw std::invalid_argument(msg.str());
  }
  const double x = lambda_p / (pi * a);
  return -units::kZeta3 / (16.0 * pi * a * a) *
         (1.0 - 2.0 * x + 3.0 * x * x);
}

std::vector<AsymptoticsComparison> validate_asymptotics(
    const Geometry& geom, const DrudeParams& drude,
    const std::vector<double>& T_list, double rel_tol) {
  require(!T_list.empty(), "temperature list must not be empty");
  const MaterialResponse material = MaterialResponse::drude(drude);

  std::vector<AsymptoticsComparison> table;
  table.reserve(T_list.size());
  for (double T : T_list) {
    const AsymptoticExpansion expansion =
        asymptotic_free_energy(geom, T, drude);
    const FreeEnergyResult direct = free_energy(geom, T, material, rel_tol);
    AsymptoticsComparison row;
    row.T = T;
    row.F_direct = direct.F;
    row.F_asym = expansion.F_total;
    row.rel_diff = std::abs(direct.F - expansion.F_total) /
                   std::abs(direct.F);
    table.push_back(row);
  }
  return table;
}

}  // namespace casimir
