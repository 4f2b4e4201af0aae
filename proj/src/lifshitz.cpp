#include "casimir/lifshitz.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/units.hpp"

namespace casimir {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void validate_rel_tol(double rel_tol) {
  require(rel_tol > 1e-14 && rel_tol < 1e-2,
          "rel_tol must lie in (1e-14, 1e-2)");
}

void validate_geometry(const Geometry& geom) {
  require(geom.a > 0.0 && std::isfinite(geom.a),
          "plate separation must be positive");
}

struct ReflectionPair {
  double A = 0.0;
  double B = 0.0;
};

ReflectionPair dielectric_pair(double zeta, double q, double eps) {
  // Ratios are computed through differences of squares so that the small
  // quantities (eps-1)*zeta^2 never cancel against q^2 in subtraction.
  const double z2 = zeta * zeta;
  const double q2 = q * q;
  const double rad = std::sqrt((eps - 1.0) * z2 + q2);
  const double denom_tm = eps * q + rad;
  const double r_tm =
      (eps - 1.0) * ((eps + 1.0) * q2 - z2) / (denom_tm * denom_tm);
  const double denom_te = q + rad;
  const double r_te = -(eps - 1.0) * z2 / (denom_te * denom_te);
  return {r_tm * r_tm, r_te * r_te};
}

ReflectionPair impedance_pair(double zeta, double q, double Z) {
  const double r_tm = (q - Z * zeta) / (q + Z * zeta);
  const double r_te = (zeta - Z * q) / (zeta + Z * q);
  return {r_tm * r_tm, r_te * r_te};
}

// Binds a material model and the evaluation temperature so that the
// temperature-dependent Drude relaxation is computed once per sum, not
// once per integrand sample.
class ReflectionEvaluator {
 public:
  ReflectionEvaluator(const MaterialResponse& material, double T)
      : material_(material) {
    switch (material.kind()) {
      case MaterialKind::Drude: {
        const DrudeParams& p = material.drude_params();
        omega_p2_ = p.omega_p * p.omega_p;
        nu_ = bloch_gruneisen_nu(T, p.relaxation);
        break;
      }
      case MaterialKind::Plasma:
      case MaterialKind::InfraredOptics:
        omega_p2_ = material.omega_p() * material.omega_p();
        break;
      case MaterialKind::ConstantEps:
        eps_ = material.eps_value();
        break;
      default:
        break;
    }
  }

  ReflectionPair at(double zeta, double q) const {
    switch (material_.kind()) {
      case MaterialKind::Drude:
        return dielectric_pair(zeta, q,
                               1.0 + omega_p2_ / (zeta * (zeta + nu_)));
      case MaterialKind::Plasma:
        return dielectric_pair(zeta, q,
                               1.0 + omega_p2_ / (zeta * zeta));
      case MaterialKind::ConstantEps:
        return dielectric_pair(zeta, q, eps_);
      case MaterialKind::IdealMetal:
        return {1.0, 1.0};
      case MaterialKind::InfraredOptics:
        return impedance_pair(
            zeta, q, zeta / std::sqrt(zeta * zeta + omega_p2_));
      case MaterialKind::PowerLawImpedance:
        return impedance_pair(zeta, q, material_.impedance(zeta));
    }
    return {};
  }

  ZeroModeCoefficients zero_mode(double q) const {
    return material_.zero_mode(q);
  }

 private:
  const MaterialResponse& material_;
  double omega_p2_ = 0.0;
  double nu_ = 0.0;
  double eps_ = 0.0;
};

// Integrand of one Matsubara mode in the substituted variable y = 2*q*a:
// y * [ln(1 - A e^-y) + ln(1 - B e^-y)], with the m = 0 coefficients taken
// from the analytic zero-frequency limits.
struct ModeIntegrand {
  const ReflectionEvaluator* refl;
  double zeta;       // Matsubara frequency of this mode
  bool zero_mode;    // true for m = 0
  double inv_2a;     // converts y back to q

  double operator()(double y) const {
    if (y <= 0.0) return 0.0;
    const double q = y * inv_2a;
    double A;
    double B;
    if (zero_mode) {
      const ZeroModeCoefficients zm = refl->zero_mode(q);
      A = zm.A0;
      B = zm.B0;
    } else {
      const ReflectionPair p = refl->at(zeta, q);
      A = p.A;
      B = p.B;
    }
    const double damp = std::exp(-y);
    double sum = 0.0;
    if (A != 0.0) sum += std::log1p(-A * damp);
    if (B != 0.0) sum += std::log1p(-B * damp);
    return y * sum;
  }
};

// Bound on |integral over [Y, inf)| of the mode integrand in y-units:
// |ln(1-x)| <= 2x for x <= 1/2 and A, B <= 1 give 4*(Y+1)*e^-Y.
double mode_tail_bound(double Y) { return 4.0 * (Y + 1.0) * std::exp(-Y); }

ModeIntegral mode_integral_impl(int m, double T, double a,
                                const ReflectionEvaluator& refl,
                                double rel_tol) {
  const double zeta_m = 2.0 * units::kPi * m * T;
  const double y_lo = 2.0 * a * zeta_m;

  ModeIntegrand f{&refl, zeta_m, m == 0, 1.0 / (2.0 * a)};

  double upper = y_lo + 40.0;
  QuadratureResult main = integrate(f, y_lo, upper, rel_tol);
  double value = main.value;
  double quad_error = main.abs_error;

  // Extend the finite window until the analytic remainder bound drops
  // below the requested relative tolerance.
  double tail = mode_tail_bound(upper);
  int extensions = 0;
  while (tail > rel_tol * std::abs(value)) {
    if (++extensions > 18) {
      const double scale = 1.0 / (4.0 * a * a);
      throw NumericsError(
          "mode integral upper truncation failed to converge",
          scale * value, scale * (quad_error + tail));
    }
    const QuadratureResult ext =
        integrate(f, upper, upper + 20.0, rel_tol,
                  0.25 * rel_tol * std::abs(value));
    value += ext.value;
    quad_error += ext.abs_error;
    upper += 20.0;
    tail = mode_tail_bound(upper);
  }

  const double scale = 1.0 / (4.0 * a * a);
  ModeIntegral result;
  result.value = scale * value;
  result.abs_error = scale * (quad_error + tail);
  return result;
}

}  // namespace

double Geometry::effective_temperature() const {
  require(a > 0.0 && std::isfinite(a), "plate separation must be positive");
  return 1.0 / (2.0 * a);
}

double MatsubaraGrid::zeta(int m) const {
  require(T > 0.0 && std::isfinite(T), "temperature must be positive");
  require(m >= 0, "Matsubara index must be non-negative");
  return 2.0 * units::kPi * m * T;
}

double MatsubaraGrid::zeta_tilde(int m, double a) const {
  require(a > 0.0 && std::isfinite(a), "plate separation must be positive");
  return 2.0 * a * zeta(m);
}

double reflection_tm(double zeta, double q, double eps) {
  require(zeta > 0.0 && std::isfinite(zeta),
          "zeta must be positive; the zero-frequency limit is analytic");
  require(q >= zeta && std::isfinite(q), "q must satisfy q >= zeta");
  require(eps >= 1.0 && std::isfinite(eps), "eps must be >= 1");
  return dielectric_pair(zeta, q, eps).A;
}

double reflection_te(double zeta, double q, double eps) {
  require(zeta > 0.0 && std::isfinite(zeta),
          "zeta must be positive; the zero-frequency limit is analytic");
  require(q >= zeta && std::isfinite(q), "q must satisfy q >= zeta");
  require(eps >= 1.0 && std::isfinite(eps), "eps must be >= 1");
  return dielectric_pair(zeta, q, eps).B;
}

double reflection_tm_impedance(double zeta, double q, double Z) {
  require(zeta > 0.0 && std::isfinite(zeta),
          "zeta must be positive; the zero-frequency limit is analytic");
  require(q >= zeta && std::isfinite(q), "q must satisfy q >= zeta");
  require(Z > 0.0 && Z <= 1.0, "impedance must lie in (0, 1]");
  return impedance_pair(zeta, q, Z).A;
}

double reflection_te_impedance(double zeta, double q, double Z) {
  require(zeta > 0.0 && std::isfinite(zeta),
          "zeta must be positive; the zero-frequency limit is analytic");
  require(q >= zeta && std::isfinite(q), "q must satisfy q >= zeta");
  require(Z > 0.0 && Z <= 1.0, "impedance must lie in (0, 1]");
  return impedance_pair(zeta, q, Z).B;
}

ModeIntegral mode_integral(int m, const MatsubaraGrid& grid,
                           const Geometry& geom,
                           const MaterialResponse& material,
                           double rel_tol) {
  require(m >= 0, "Matsubara index must be non-negative");
  require(grid.T > 0.0 && std::isfinite(grid.T),
          "temperature must be positive");
  validate_geometry(geom);
  validate_rel_tol(rel_tol);
  const ReflectionEvaluator refl(material, grid.T);
  return mode_integral_impl(m, grid.T, geom.a, refl, rel_tol);
}

FreeEnergyResult free_energy(const Geometry& geom, double T,
                             const MaterialResponse& material,
                             double rel_tol) {
  validate_geometry(geom);
  require(T > 0.0 && std::isfinite(T), "temperature must be positive");
  validate_rel_tol(rel_tol);

  const double a = geom.a;
  const ReflectionEvaluator refl(material, T);
  const double prefactor = T / (2.0 * units::kPi);

  const ModeIntegral zero = mode_integral_impl(0, T, a, refl, rel_tol);
  double sum = 0.5 * zero.value;
  double quad_error = 0.5 * zero.abs_error;

  // Spacing of the dimensionless Matsubara frequencies.
  const double delta = 4.0 * units::kPi * a * T;
  const double zeta_tilde_stop = std::log(1.0 / rel_tol) + 10.0;
  const double one_minus_ed = -std::expm1(-delta);  // 1 - e^-delta

  constexpr int kMaxModes = 10000000;
  int m = 0;
  double matsubara_tail = 0.0;
  while (true) {
    ++m;
    if (m > kMaxModes) {
      throw NumericsError(
          "Matsubara sum exceeded the mode budget; temperature too low "
          "for direct summation at this separation",
          prefactor * sum, prefactor * (quad_error + matsubara_tail));
    }
    const ModeIntegral mode = mode_integral_impl(m, T, a, refl, rel_tol);
    sum += mode.value;
    quad_error += mode.abs_error;

    // Remainder bound: |I_k| <= (1/a^2)(zt_k+1)e^{-zt_k} summed in closed
    // form over all k > m (geometric sums of e^{-delta}).
    const double Y = delta * (m + 1);
    matsubara_tail = std::exp(-Y) *
                     ((Y + 1.0) / one_minus_ed +
                      delta * std::exp(-delta) /
                          (one_minus_ed * one_minus_ed)) /
                     (a * a);

    const double zeta_tilde_m = delta * m;
    if (zeta_tilde_m > zeta_tilde_stop &&
        std::abs(mode.value) < rel_tol * std::abs(sum) &&
        matsubara_tail < rel_tol * std::abs(sum)) {
      break;
    }
  }

  FreeEnergyResult result;
  result.F = prefactor * sum;
  result.tail_bound = prefactor * matsubara_tail;
  result.abs_error = prefactor * quad_error + result.tail_bound;
  result.m_used = m + 1;  // modes 0..m inclusive
  if (!(result.F < 0.0)) {
    throw NumericsError(
        "free energy failed the attraction sign check; numerical "
        "breakdown",
        result.F, result.abs_error);
  }
  return result;
}

FreeEnergyResult brute_force_free_energy(const Geometry& geom, double T,
                                         const MaterialResponse& material) {
  validate_geometry(geom);
  require(T > 0.0 && std::isfinite(T), "temperature must be positive");

  const double a = geom.a;
  const double T_eff = geom.effective_temperature();
  const int m_max =
      static_cast<int>(std::ceil(50.0 * T_eff / (units::kPi * T)));
  constexpr int kOracleModeBudget = 40000;
  if (m_max > kOracleModeBudget) {
    throw NumericsError(
        "brute-force oracle mode budget exceeded; use the adaptive path "
        "for this regime",
        0.0, 0.0);
  }

  const ReflectionEvaluator refl(material, T);
  const double prefactor = T / (2.0 * units::kPi);
  const double delta = 4.0 * units::kPi * a * T;

  constexpr int kPanels = 200000;  // composite Simpson panels (even)
  const double span = 200.0;
  const double h = span / kPanels;

  double sum = 0.0;
  double err = 0.0;
  for (int m = 0; m <= m_max; ++m) {
    const double zeta_m = 2.0 * units::kPi * m * T;
    const double y_lo = 2.0 * a * zeta_m;
    ModeIntegrand f{&refl, zeta_m, m == 0, 1.0 / (2.0 * a)};

    // One pass accumulates both the h and the 2h Simpson sums; their
    // difference provides the per-mode error estimate.
    double fine = 0.0;
    double coarse = 0.0;
    for (int i = 0; i <= kPanels; ++i) {
      const double y = y_lo + i * h;
      const double v = f(y);
      double wf;
      if (i == 0 || i == kPanels) {
        wf = 1.0;
      } else {
        wf = (i % 2 == 1) ? 4.0 : 2.0;
      }
      fine += wf * v;
      if (i % 2 == 0) {
        const int j = i / 2;
        double wc;
        if (j == 0 || j == kPanels / 2) {
          wc = 1.0;
        } else {
          wc = (j % 2 == 1) ? 4.0 : 2.0;
        }
        coarse += wc * v;
      }
    }
    const double value_fine = fine * h / 3.0;
    const double value_coarse = coarse * 2.0 * h / 3.0;
    const double weight = (m == 0) ? 0.5 : 1.0;
    sum += weight * value_fine;
    err += weight * std::abs(value_fine - value_coarse);
  }

  const double scale = 1.0 / (4.0 * a * a);
  const double one_minus_ed = -std::expm1(-delta);
  const double Y = delta * (m_max + 1);
  const double matsubara_tail =
      std::exp(-Y) *
      ((Y + 1.0) / one_minus_ed +
       delta * std::exp(-delta) / (one_minus_ed * one_minus_ed)) /
      (a * a);

  FreeEnergyResult result;
  result.F = prefactor * scale * sum;
  result.tail_bound = prefactor * matsubara_tail;
  result.abs_error = prefactor * scale * err + result.tail_bound;
  result.m_used = m_max + 1;
  return result;
}

}  // namespace casimir
