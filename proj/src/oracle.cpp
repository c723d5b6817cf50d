/**
 * This code is part of entwit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "entwit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "entwit/errors.hpp"

namespace entwit {

namespace {

constexpr double kPi = std::numbers::pi;

/// Spacing that keeps at least 20 samples per period of cos x and sin x.
constexpr double kOscillationSpacing = 2.0 * kPi / 20.0;

void check_pair_budget(const Grid& grid) {
  const long long total =
      static_cast<long long>(grid.n()) * static_cast<long long>(grid.n());
  if (total > kMaxGridPoints) {
    throw GridTooLargeError(
        "two-mode grid needs " + std::to_string(total) +
        " points, above the budget of " + std::to_string(kMaxGridPoints));
  }
}

struct PairRowTerms {
  Complex cc;
  Complex cs;
  Complex sc;
  Complex ss;
};

/// Inner (mode-2) sums of one mode-1 row of the projected-amplitude
/// integrand. Accumulation order inside a row is fixed.
PairRowTerms pair_row(const Eigen::VectorXcd& values, int n, int row,
                      const Eigen::VectorXd& window_cos,
                      const Eigen::VectorXd& window_sin) {
  Complex inner_c = 0.0;
  Complex inner_s = 0.0;
  const Eigen::Index base = static_cast<Eigen::Index>(row) * n;
  for (int j = 0; j < n; ++j) {
    const Complex v = values(base + j);
    inner_c += window_cos(j) * v;
    inner_s += window_sin(j) * v;
  }
  return {window_cos(row) * inner_c, window_cos(row) * inner_s,
          window_sin(row) * inner_c, window_sin(row) * inner_s};
}

}  // namespace

Grid::Grid(double x_min, double x_max, int n)
    : x_min_(x_min), x_max_(x_max), n_(n) {
  if (!(std::isfinite(x_min) && std::isfinite(x_max) && x_min < x_max)) {
    throw std::invalid_argument("grid needs x_min < x_max");
  }
  if (n < 16) {
    throw std::invalid_argument("grid needs at least 16 points");
  }
  if (n > kMaxGridPoints) {
    throw GridTooLargeError("grid of " + std::to_string(n) +
                            " points exceeds the budget of " +
                            std::to_string(kMaxGridPoints));
  }
  spacing_ = (x_max_ - x_min_) / (n_ - 1);
}

Grid make_grid(double sigma_max, double m_abs_max, int points_per_sigma) {
  if (!(std::isfinite(sigma_max) && sigma_max > 0.0)) {
    throw std::invalid_argument("sigma_max must be positive");
  }
  if (!(std::isfinite(m_abs_max) && m_abs_max >= 0.0)) {
    throw std::invalid_argument("m_abs_max must be nonnegative");
  }
  if (points_per_sigma < 1) {
    throw std::invalid_argument("points_per_sigma must be at least 1");
  }
  const double half_extent = m_abs_max + 8.0 * sigma_max;
  const double target =
      std::min(sigma_max / points_per_sigma, kOscillationSpacing);
  const double steps = std::ceil(2.0 * half_extent / target);
  if (steps + 1.0 > static_cast<double>(kMaxGridPoints)) {
    throw GridTooLargeError("requested spacing needs " +
                            std::to_string(steps + 1.0) + " points per axis");
  }
  const int n = std::max(16, static_cast<int>(steps) + 1);
  return Grid(-half_extent, half_extent, n);
}

Grid single_grid(const GaussianSingle& g, int points_per_scale) {
  return make_grid(g.sigma, g.m, points_per_scale);
}

Grid pair_grid(const GaussianPair& pair, const ProjectionWidth& width,
               int points_per_scale) {
  if (points_per_scale < 1) {
    throw std::invalid_argument("points_per_scale must be at least 1");
  }
  const double sigma_max = std::max(pair.sigma, pair.Sigma);
  const double min_scale =
      std::min({pair.sigma, pair.Sigma, width.Gamma});
  const double ratio = sigma_max / min_scale;
  const int points_per_sigma =
      static_cast<int>(std::ceil(ratio * points_per_scale));
  Grid grid = make_grid(sigma_max, 0.0, points_per_sigma);
  check_pair_budget(grid);
  return grid;
}

DiscretizedWavefunction discretize_single(const GaussianSingle& g,
                                          const Grid& grid) {
  const double norm_const =
      std::pow(2.0 * kPi * g.sigma * g.sigma, -0.25);
  const double inv_four_var = 1.0 / (4.0 * g.sigma * g.sigma);
  Eigen::VectorXcd values(grid.n());
  double raw = 0.0;
  for (int i = 0; i < grid.n(); ++i) {
    const double x = grid.point(i) - g.m;
    const double v = norm_const * std::exp(-x * x * inv_four_var);
    values(i) = v;
    raw += grid.weight(i) * v * v;
  }
  values /= std::sqrt(raw);
  return {grid, std::move(values), raw};
}

DiscretizedWavefunction discretize_pair(const GaussianPair& pair,
                                        const Grid& grid) {
  check_pair_budget(grid);
  const int n = grid.n();
  const double norm_const =
      1.0 / std::sqrt(2.0 * kPi * pair.sigma * pair.Sigma);
  const double inv_sym = 1.0 / (8.0 * pair.sigma * pair.sigma);
  const double inv_anti = 1.0 / (8.0 * pair.Sigma * pair.Sigma);
  Eigen::VectorXcd values(static_cast<Eigen::Index>(n) * n);
  std::vector<double> row_norms(n, 0.0);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    const double x1 = grid.point(i);
    const Eigen::Index base = static_cast<Eigen::Index>(i) * n;
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      const double x2 = grid.point(j);
      const double sym = x1 + x2;
      const double anti = x1 - x2;
      const double v =
          norm_const * std::exp(-sym * sym * inv_sym - anti * anti * inv_anti);
      values(base + j) = v;
      row += grid.weight(j) * v * v;
    }
    row_norms[i] = grid.weight(i) * row;
  }
  const double raw = kernels::sum_blocked(
      std::span<const double>(row_norms.data(), row_norms.size()));
  values /= std::sqrt(raw);
  return {grid, std::move(values), raw};
}

SingleMoments oracle_single_moments(const GaussianSingle& g, const Grid& grid,
                                    Exec exec) {
  const DiscretizedWavefunction psi = discretize_single(g, grid);
  const int n = grid.n();
  SingleMoments moments;
  if (exec == Exec::kSerial) {
    for (int i = 0; i < n; ++i) {
      const double x = grid.point(i);
      const double c = std::cos(x);
      const double s = std::sin(x);
      const double density = grid.weight(i) * std::norm(psi.values(i));
      moments.cc += density * c * c;
      moments.cs += density * c * s;
      moments.ss += density * s * s;
    }
    return moments;
  }
  std::vector<double> cc(n);
  std::vector<double> cs(n);
  std::vector<double> ss(n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    const double x = grid.point(i);
    const double c = std::cos(x);
    const double s = std::sin(x);
    const double density = grid.weight(i) * std::norm(psi.values(i));
    cc[i] = density * c * c;
    cs[i] = density * c * s;
    ss[i] = density * s * s;
  }
  moments.cc = kernels::sum_blocked_parallel({cc.data(), cc.size()});
  moments.cs = kernels::sum_blocked_parallel({cs.data(), cs.size()});
  moments.ss = kernels::sum_blocked_parallel({ss.data(), ss.size()});
  return moments;
}

DensityMatrix oracle_single_reduced(const GaussianSingle& g, const Grid& grid,
                                    Exec exec) {
  const SingleMoments m = oracle_single_moments(g, grid, exec);
  Eigen::Matrix2cd rho;
  rho << m.cc, m.cs, m.cs, m.ss;
  rho /= m.trace();
  return DensityMatrix({2}, rho);
}

PairProjectedAmplitudes oracle_pair_amplitudes(const GaussianPair& pair,
                                               const ProjectionWidth& width,
                                               const Grid& grid, Exec exec) {
  check_pair_budget(grid);
  const DiscretizedWavefunction psi = discretize_pair(pair, grid);
  const int n = grid.n();

  // Per-axis window factors: trapezoid weight times the acceptance Gaussian,
  // folded with cos / sin.
  const double window_norm =
      std::pow(2.0 * kPi * width.Gamma * width.Gamma, -0.25);
  const double inv_four_gamma_sq =
      1.0 / (4.0 * width.Gamma * width.Gamma);
  Eigen::VectorXd window_cos(n);
  Eigen::VectorXd window_sin(n);
  for (int i = 0; i < n; ++i) {
    const double x = grid.point(i);
    const double gw =
        grid.weight(i) * window_norm * std::exp(-x * x * inv_four_gamma_sq);
    window_cos(i) = gw * std::cos(x);
    window_sin(i) = gw * std::sin(x);
  }

  PairProjectedAmplitudes out{0.0, 0.0, 0.0, 0.0};
  if (exec == Exec::kSerial) {
    for (int i = 0; i < n; ++i) {
      const PairRowTerms row =
          pair_row(psi.values, n, i, window_cos, window_sin);
      out.cc += row.cc;
      out.cs += row.cs;
      out.sc += row.sc;
      out.ss += row.ss;
    }
    return out;
  }

  std::vector<Complex> cc(n);
  std::vector<Complex> cs(n);
  std::vector<Complex> sc(n);
  std::vector<Complex> ss(n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    const PairRowTerms row =
        pair_row(psi.values, n, i, window_cos, window_sin);
    cc[i] = row.cc;
    cs[i] = row.cs;
    sc[i] = row.sc;
    ss[i] = row.ss;
  }
  out.cc = kernels::sum_blocked_parallel({cc.data(), cc.size()});
  out.cs = kernels::sum_blocked_parallel({cs.data(), cs.size()});
  out.sc = kernels::sum_blocked_parallel({sc.data(), sc.size()});
  out.ss = kernels::sum_blocked_parallel({ss.data(), ss.size()});
  return out;
}

CompressedPair oracle_pair_compress(const GaussianPair& pair,
                                    const ProjectionWidth& width,
                                    const Grid& grid, Exec exec) {
  const PairProjectedAmplitudes amps =
      oracle_pair_amplitudes(pair, width, grid, exec);
  const double mass = std::norm(amps.cc) + std::norm(amps.cs) +
                      std::norm(amps.sc) + std::norm(amps.ss);
  if (mass < kAmplitudeUnderflowTol) {
    throw DegenerateProjectionError(
        "quadrature projection collapsed to zero mass");
  }
  Eigen::VectorXcd v(4);
  v << amps.cc, amps.cs, amps.sc, amps.ss;
  v /= std::sqrt(mass);
  return CompressedPair{PureState({2, 2}, std::move(v)), mass};
}

WitnessReport oracle_witness(const GaussianPair& pair,
                             const ProjectionWidth& width, const Grid& grid,
                             Exec exec) {
  return witness_report(oracle_pair_compress(pair, width, grid, exec));
}

double compare_reports(const WitnessReport& analytic,
                       const WitnessReport& numeric) {
  const double dc = std::abs(analytic.concurrence - numeric.concurrence);
  const double dp = std::abs(analytic.ppt_min_eig - numeric.ppt_min_eig);
  const double du = std::abs(analytic.output_subsystem_purity -
                             numeric.output_subsystem_purity);
  return std::max({dc, dp, du});
}

}  // namespace entwit
