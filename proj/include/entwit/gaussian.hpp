/**
 * This code is part of entwit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef ENTWIT_GAUSSIAN_HPP_
#define ENTWIT_GAUSSIAN_HPP_

#include "entwit/quantum_core.hpp"
#include "entwit/qudit.hpp"

namespace entwit {

/// Bloch components of a protocol output must stay in the x-z plane within
/// this tolerance; larger |b_y| marks a foreign state.
inline constexpr double kBlochPlaneTol = 1e-9;

/// Squared amplitude mass below this value counts as a fully suppressed
/// (degenerate) continuous-variable projection.
inline constexpr double kAmplitudeUnderflowTol = 1e-300;

/// Real Gaussian wave packet with width sigma and center m. The center is
/// pi-periodic for every protocol observable, so it is stored folded into
/// [0, pi).
struct GaussianSingle {
  GaussianSingle(double sigma, double m);

  double sigma;
  double m;
};

/// Two-mode Gaussian with width sigma in the symmetric (x1 + x2) direction
/// and Sigma in the antisymmetric (x1 - x2) direction. Entangled whenever
/// sigma != Sigma.
struct GaussianPair {
  GaussianPair(double sigma, double Sigma);

  double sigma;
  double Sigma;
};

/// Width of the Gaussian acceptance window used for post-selection.
struct ProjectionWidth {
  explicit ProjectionWidth(double Gamma);

  double Gamma;
};

/// Projected two-qubit diagonal amplitudes N (a_plus |00> + a_minus |11>),
/// before normalization. a_minus carries the sign of (sigma - Sigma).
struct PairAmplitudes {
  double a_plus = 0.0;
  double a_minus = 0.0;
};

/// Qubit left after coupling the wave packet to a qubit via the continuous
/// rotation and tracing the mode out:
///   (1 + exp(-2 sigma^2) (cos(2m) sz + sin(2m) sx)) / 2.
DensityMatrix single_qubit_reduced(const GaussianSingle& g);

/// Inverts single_qubit_reduced: sigma from the Bloch norm, m from the Bloch
/// angle folded into [0, pi). Raises NotProtocolOutputError when the state
/// leaves the x-z plane and UnrecoverableStateError when the Bloch vector
/// vanishes (infinite width) or reaches the surface (zero width).
GaussianSingle recover_params(const DensityMatrix& rho_b);

/// Closed-form projected amplitudes
///   a_pm = (±exp(-2 s^2 G^2/(s^2+G^2)) + exp(-2 S^2 G^2/(S^2+G^2))) / D,
///   D = sqrt((s^2+G^2)(S^2+G^2) / (s S G^2)),
/// evaluated through overflow-safe forms for extreme widths.
PairAmplitudes pair_amplitudes(const GaussianPair& pair,
                               const ProjectionWidth& width);

/// Normalized two-qubit output state with the squared amplitude mass as the
/// relative post-selection density. Raises DegenerateProjectionError when
/// both amplitudes underflow.
CompressedPair two_qubit_state(const GaussianPair& pair,
                               const ProjectionWidth& width);

/// Purity of either reduced mode of the input pair: 2 s S / (s^2 + S^2).
double purity_input(const GaussianPair& pair);

/// Purity of either output qubit:
///   (sech^2(2 G^4 (s^2 - S^2) / ((s^2+G^2)(S^2+G^2))) + 1) / 2.
/// Equals 1 exactly when sigma == Sigma.
double purity_output(const GaussianPair& pair, const ProjectionWidth& width);

/// Wide-window limit of purity_output: (sech^2(2 (s^2 - S^2)) + 1) / 2.
double purity_output_limit(const GaussianPair& pair);

/// Output purity in the extreme squeezing limit sigma -> inf, Sigma -> 0 at
/// fixed window: (sech^2(2 G^2) + 1) / 2.
double purity_output_extreme(const ProjectionWidth& width);

/// Compresses the pair and evaluates the witness on the two-qubit output.
WitnessReport witness_gaussian(const GaussianPair& pair,
                               const ProjectionWidth& width);

}  // namespace entwit

#endif  // ENTWIT_GAUSSIAN_HPP_
