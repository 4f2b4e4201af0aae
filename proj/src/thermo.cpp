#include "casimir/thermo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "casimir/errors.hpp"
#include "casimir/parallel.hpp"
#include "casimir/units.hpp"

namespace casimir {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

double central_difference_T(const Geometry& geom, double T, double h,
                            const MaterialResponse& material,
                            double rel_tol) {
  const FreeEnergyResult hi = free_energy(geom, T + h, material, rel_tol);
  const FreeEnergyResult lo = free_energy(geom, T - h, material, rel_tol);
  return -(hi.F - lo.F) / (2.0 * h);
}

double central_difference_a(const Geometry& geom, double T, double h,
                            const MaterialResponse& material,
                            double rel_tol) {
  const FreeEnergyResult hi =
      free_energy({geom.a + h}, T, material, rel_tol);
  const FreeEnergyResult lo =
      free_energy({geom.a - h}, T, material, rel_tol);
  return -(hi.F - lo.F) / (2.0 * h);
}

// Solves the 3x3 normal equations by Gaussian elimination with partial
// pivoting; the systems here are tiny and well-scaled after the caller
// normalizes the abscissae.
std::array<double, 3> solve3(std::array<std::array<double, 3>, 3> A,
                             std::array<double, 3> b) {
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 3; ++row) {
      if (std::abs(A[row][col]) > std::abs(A[pivot][col])) pivot = row;
    }
    std::swap(A[col], A[pivot]);
    std::swap(b[col], b[pivot]);
    if (A[col][col] == 0.0) {
      throw NumericsError("singular system in quadratic fit", 0.0, 0.0);
    }
    for (int row = col + 1; row < 3; ++row) {
      const double factor = A[row][col] / A[col][col];
      for (int k = col; k < 3; ++k) A[row][k] -= factor * A[col][k];
      b[row] -= factor * b[col];
    }
  }
  std::array<double, 3> x{};
  for (int row = 2; row >= 0; --row) {
    double acc = b[row];
    for (int k = row + 1; k < 3; ++k) acc -= A[row][k] * x[k];
    x[row] = acc / A[row][row];
  }
  return x;
}

// Golden-section refinement of an interior extremum of |P|(T) inside
// [lo, hi], to a resolution of about 1 K.  maximize selects whether the
// bracketed extremum is a maximum or a minimum of the magnitude.
double refine_turning_point(const Geometry& geom,
                            const MaterialResponse& material, double lo,
                            double hi, bool maximize, double rel_tol) {
  const double resolution = units::kelvin_to_natural(1.0);
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);

  auto magnitude = [&](double T) {
    const double P = pressure(geom, T, material, rel_tol).P;
    const double m = std::abs(P);
    return maximize ? m : -m;
  };

  double x1 = hi - golden * (hi - lo);
  double x2 = lo + golden * (hi - lo);
  double f1 = magnitude(x1);
  double f2 = magnitude(x2);
  int guard = 0;
  while (hi - lo > resolution && ++guard < 80) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + golden * (hi - lo);
      f2 = magnitude(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - golden * (hi - lo);
      f1 = magnitude(x1);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

EntropyResult entropy(const Geometry& geom, double T,
                      const MaterialResponse& material, double rel_tol) {
  require(T > 0.0 && std::isfinite(T), "temperature must be positive");
  const double T_eff = geom.effective_temperature();
  const double h = std::min(T / 4.0, T_eff / 200.0);
  require(T + h != T && T - h != T,
          "finite-difference step underflows at this temperature");

  const double S_h =
      central_difference_T(geom, T, h, material, rel_tol);
  const double S_h2 =
      central_difference_T(geom, T, 0.5 * h, material, rel_tol);

  EntropyResult result;
  result.T = T;
  result.step_used = h;
  result.S = (4.0 * S_h2 - S_h) / 3.0;
  result.richardson_error = std::abs(S_h - S_h2) / 3.0;
  return result;
}

PressureResult pressure(const Geometry& geom, double T,
                        const MaterialResponse& material, double rel_tol) {
  require(geom.a > 0.0 && std::isfinite(geom.a),
          "plate separation must be positive");
  require(T > 0.0 && std::isfinite(T), "temperature must be positive");
  const double h = geom.a / 1000.0;
  require(geom.a + h != geom.a,
          "finite-difference step underflows at this separation");

  const double P_h =
      central_difference_a(geom, T, h, material, rel_tol);
  const double P_h2 =
      central_difference_a(geom, T, 0.5 * h, material, rel_tol);

  PressureResult result;
  result.a = geom.a;
  result.step_used = h;
  result.P = (4.0 * P_h2 - P_h) / 3.0;
  result.richardson_error = std::abs(P_h - P_h2) / 3.0;
  return result;
}

NernstResult nernst_limit(const Geometry& geom,
                          const MaterialResponse& material,
                          const std::vector<double>& T_sequence,
                          double rel_tol) {
  require(T_sequence.size() >= 4,
          "Nernst extrapolation needs at least four temperatures");
  const double T_eff = geom.effective_temperature();
  for (std::size_t i = 0; i < T_sequence.size(); ++i) {
    const double T = T_sequence[i];
    require(T > 0.0 && std::isfinite(T), "temperatures must be positive");
    if (!(T < T_eff / 20.0)) {
      std::ostringstream msg;
      msg << "temperature " << units::natural_to_kelvin(T)
          << " K is not inside the low-temperature window T_eff/20 = "
          << units::natural_to_kelvin(T_eff / 20.0) << " K";
      throw std::invalid_argument(msg.str());
    }
    if (i > 0) {
      require(T < T_sequence[i - 1],
              "temperature sequence must be strictly decreasing");
    }
    if (material.kind() == MaterialKind::Drude) {
      const double nu =
          bloch_gruneisen_nu(T, material.drude_params().relaxation);
      const double zeta1 = 2.0 * units::kPi * T;
      if (!(nu < 0.1 * zeta1)) {
        std::ostringstream msg;
        msg << "relaxation applicability violated at T = "
            << units::natural_to_kelvin(T) << " K: nu(T) = " << nu
            << " eV is not small against the first Matsubara frequency "
            << zeta1 << " eV";
        throw std::invalid_argument(msg.str());
      }
    }
  }

  const int n = static_cast<int>(T_sequence.size());
  std::vector<double> S(static_cast<std::size_t>(n));
  parallel_for(n, [&](int i) {
    S[static_cast<std::size_t>(i)] =
        entropy(geom, T_sequence[static_cast<std::size_t>(i)], material,
                rel_tol)
            .S;
  });

  // Normalize abscissae by the largest temperature so the normal equations
  // stay well-conditioned.
  const double T_scale = T_sequence.front();
  std::array<std::array<double, 3>, 3> ata{};
  std::array<double, 3> atb{};
  for (int i = 0; i < n; ++i) {
    const double t = T_sequence[static_cast<std::size_t>(i)] / T_scale;
    const std::array<double, 3> row{1.0, t, t * t};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) ata[r][c] += row[r] * row[c];
      atb[r] += row[r] * S[static_cast<std::size_t>(i)];
    }
  }
  const std::array<double, 3> coeff = solve3(ata, atb);

  double residual_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = T_sequence[static_cast<std::size_t>(i)] / T_scale;
    const double fitted = coeff[0] + coeff[1] * t + coeff[2] * t * t;
    const double r = S[static_cast<std::size_t>(i)] - fitted;
    residual_sq += r * r;
  }

  NernstResult result;
  result.S0 = coeff[0];
  result.fit_error = std::sqrt(residual_sq);
  return result;
}

std::vector<double> temperature_grid(double T_min, double T_max, int n) {
  require(n >= 2, "grid needs at least two points");
  require(T_min > 0.0 && T_max > T_min && std::isfinite(T_max),
          "grid bounds must satisfy 0 < T_min < T_max");

  const double crossover = units::kelvin_to_natural(50.0);
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n));

  // count points log-spaced starting at lo, strictly below hi.
  auto log_fill = [&grid](double lo, double hi, int count) {
    const double ratio = std::pow(hi / lo, 1.0 / count);
    double value = lo;
    for (int i = 0; i < count; ++i) {
      grid.push_back(value);
      value *= ratio;
    }
  };

  if (T_max <= crossover || (T_min < crossover && n < 4)) {
    log_fill(T_min, T_max, n - 1);
    grid.push_back(T_max);
  } else if (T_min >= crossover) {
    const double step = (T_max - T_min) / (n - 1);
    for (int i = 0; i < n - 1; ++i) grid.push_back(T_min + i * step);
    grid.push_back(T_max);
  } else {
    const int n_log = std::max(2, n / 4);
    const int n_lin = n - n_log;  // >= 2 because n >= 4 here
    log_fill(T_min, crossover, n_log);  // strictly below crossover
    const double step = (T_max - crossover) / (n_lin - 1);
    for (int i = 0; i < n_lin - 1; ++i) grid.push_back(crossover + i * step);
    grid.push_back(T_max);
  }
  return grid;
}

MonotonicityReport classify_monotonicity(const Geometry& geom,
                                         const MaterialResponse& material,
                                         std::pair<double, double> T_range,
                                         int n_samples, double rel_tol) {
  require(n_samples >= 32, "classification needs at least 32 samples");
  const double T_cap = units::kelvin_to_natural(2000.0);
  require(T_range.first > 0.0 && T_range.second > T_range.first,
          "temperature range must satisfy 0 < T_min < T_max");
  require(T_range.second <= T_cap,
          "temperature range must stay within 2000 K");

  const std::vector<double> grid =
      temperature_grid(T_range.first, T_range.second, n_samples);
  const int n = static_cast<int>(grid.size());

  std::vector<double> magnitude(static_cast<std::size_t>(n));
  std::vector<double> error(static_cast<std::size_t>(n));
  parallel_for(n, [&](int i) {
    const PressureResult p =
        pressure(geom, grid[static_cast<std::size_t>(i)], material,
                 rel_tol);
    magnitude[static_cast<std::size_t>(i)] = std::abs(p.P);
    error[static_cast<std::size_t>(i)] = p.richardson_error;
  });

  // Keep only the differences that clear 3x the combined error estimate;
  // everything else is numerically indistinguishable from flat.
  struct SignedDiff {
    int index;  // between grid[index] and grid[index + 1]
    int sign;
  };
  std::vector<SignedDiff> significant;
  for (int i = 0; i + 1 < n; ++i) {
    const double diff = magnitude[static_cast<std::size_t>(i + 1)] -
                        magnitude[static_cast<std::size_t>(i)];
    const double threshold = 3.0 * (error[static_cast<std::size_t>(i)] +
                                    error[static_cast<std::size_t>(i + 1)]);
    if (std::abs(diff) > threshold) {
      significant.push_back({i, diff > 0.0 ? 1 : -1});
    }
  }
  if (significant.empty()) {
    throw NumericsError(
        "monotonicity scan inconclusive: every sample difference is "
        "below its error bound; retry with a tighter rel_tol",
        0.0, 0.0);
  }

  MonotonicityReport report;
  report.scanned_range = T_range;
  report.n_samples = n_samples;

  const bool any_decrease =
      std::any_of(significant.begin(), significant.end(),
                  [](const SignedDiff& d) { return d.sign < 0; });
  report.classification = any_decrease
                              ? Monotonicity::NonMonotonic
                              : Monotonicity::MonotoneIncreasingMagnitude;

  if (any_decrease) {
    // A decrease already under way at the window edge has its reversal at
    // (or before) the edge itself.
    if (significant.front().sign < 0) {
      report.turning_points.push_back(grid.front());
    }
    for (std::size_t k = 1; k < significant.size(); ++k) {
      if (significant[k].sign != significant[k - 1].sign) {
        const double lo =
            grid[static_cast<std::size_t>(significant[k - 1].index)];
        const double hi =
            grid[static_cast<std::size_t>(significant[k].index + 1)];
        const bool maximize = significant[k - 1].sign > 0;
        report.turning_points.push_back(refine_turning_point(
            geom, material, lo, hi, maximize, rel_tol));
      }
    }
    if (report.turning_points.empty()) {
      // All significant differences decrease: the curve enters the window
      // already falling.
      report.turning_points.push_back(grid.front());
    }
  }
  return report;
}

}  // namespace casimir
