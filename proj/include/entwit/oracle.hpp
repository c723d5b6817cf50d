/**
 * This code is part of entwit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef ENTWIT_ORACLE_HPP_
#define ENTWIT_ORACLE_HPP_

#include "entwit/gaussian.hpp"
#include "entwit/kernels.hpp"
#include "entwit/quantum_core.hpp"
#include "entwit/qudit.hpp"

namespace entwit {

/// Hard cap on quadrature points: per axis for one-mode integrals and per
/// axis pair for two-mode integrals.
inline constexpr int kMaxGridPoints = 1 << 20;

/// Any conforming grid must reproduce the closed-form witness quantities
/// within this bound.
inline constexpr double kOracleDeviationTol = 1e-5;

/// Uniform grid with trapezoidal quadrature weights.
class Grid {
 public:
  Grid(double x_min, double x_max, int n);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  int n() const { return n_; }
  double spacing() const { return spacing_; }
  double extent() const { return x_max_ - x_min_; }
  double point(int i) const { return x_min_ + spacing_ * i; }
  double weight(int i) const {
    return (i == 0 || i == n_ - 1) ? 0.5 * spacing_ : spacing_;
  }

 private:
  double x_min_;
  double x_max_;
  int n_;
  double spacing_;
};

/// Builds a symmetric grid covering every Gaussian feature: extent
/// +-(m_abs_max + 8 sigma_max), spacing at most sigma_max/points_per_sigma
/// and at most 2 pi / 20 so the trigonometric factors stay resolved.
Grid make_grid(double sigma_max, double m_abs_max, int points_per_sigma);

/// Rule-derived grid for a single wave packet.
Grid single_grid(const GaussianSingle& g, int points_per_scale = 4);

/// Rule-derived grid for a pair: the extent follows the larger width, the
/// spacing resolves the smallest of sigma, Sigma, Gamma.
Grid pair_grid(const GaussianPair& pair, const ProjectionWidth& width,
               int points_per_scale = 4);

/// Wave function sampled on a grid (length n, or n^2 row-major for two
/// modes), rescaled to unit quadrature norm. raw_norm keeps the squared
/// quadrature norm of the analytic samples before rescaling; for an
/// adequate grid it is 1 up to truncation error.
struct DiscretizedWavefunction {
  Grid grid;
  Eigen::VectorXcd values;
  double raw_norm = 0.0;
};

DiscretizedWavefunction discretize_single(const GaussianSingle& g,
                                          const Grid& grid);
DiscretizedWavefunction discretize_pair(const GaussianPair& pair,
                                        const Grid& grid);

/// Quadrature moments of |psi|^2 against cos^2, cos sin, sin^2.
struct SingleMoments {
  double cc = 0.0;
  double cs = 0.0;
  double ss = 0.0;

  double trace() const { return cc + ss; }
};

SingleMoments oracle_single_moments(const GaussianSingle& g, const Grid& grid,
                                    Exec exec = Exec::kParallel);

/// Numeric counterpart of single_qubit_reduced, assembled from quadrature
/// moments and normalized by the quadrature trace.
DensityMatrix oracle_single_reduced(const GaussianSingle& g, const Grid& grid,
                                    Exec exec = Exec::kParallel);

/// Projected two-qubit amplitudes <mn| from 2-D quadrature; indices are the
/// trigonometric factors applied to mode 1 and mode 2.
struct PairProjectedAmplitudes {
  Complex cc;
  Complex cs;
  Complex sc;
  Complex ss;
};

PairProjectedAmplitudes oracle_pair_amplitudes(const GaussianPair& pair,
                                               const ProjectionWidth& width,
                                               const Grid& grid,
                                               Exec exec = Exec::kParallel);

/// Numeric counterpart of two_qubit_state.
CompressedPair oracle_pair_compress(const GaussianPair& pair,
                                    const ProjectionWidth& width,
                                    const Grid& grid,
                                    Exec exec = Exec::kParallel);

/// Witness evaluated on the quadrature-built output state.
WitnessReport oracle_witness(const GaussianPair& pair,
                             const ProjectionWidth& width, const Grid& grid,
                             Exec exec = Exec::kParallel);

/// Maximum absolute deviation over concurrence, minimal partial-transpose
/// eigenvalue, and output subsystem purity.
double compare_reports(const WitnessReport& analytic,
                       const WitnessReport& numeric);

}  // namespace entwit

#endif  // ENTWIT_ORACLE_HPP_
