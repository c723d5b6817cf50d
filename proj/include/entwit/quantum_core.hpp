/**
 * This code is part of entwit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef ENTWIT_QUANTUM_CORE_HPP_
#define ENTWIT_QUANTUM_CORE_HPP_

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace entwit {

using Complex = std::complex<double>;

/// Shared validation tolerances for state types.
inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigenvalueFloor = -1e-10;

/// Concurrence above this value counts as an entanglement detection.
inline constexpr double kEntanglementTol = 1e-8;

/// Normalized pure state over an ordered list of subsystems.
///
/// Subsystem indices are 0-based with the leftmost factor first, and the
/// amplitude vector is flattened row-major: for dims [dA, dB] the basis state
/// |i, k> sits at flat index i * dB + k.
class PureState {
 public:
  /// Validates dimensions (each >= 2, product matching the amplitude count)
  /// and unit norm within kNormTol.
  PureState(std::vector<int> dims, Eigen::VectorXcd amplitudes);

  /// Rescales an arbitrary nonzero amplitude vector to unit norm.
  static PureState normalized(std::vector<int> dims,
                              Eigen::VectorXcd amplitudes);

  /// Computational basis state |index> in the flattened ordering.
  static PureState basis_state(std::vector<int> dims, Eigen::Index index);

  const std::vector<int>& dims() const { return dims_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::Index total_dim() const { return amps_.size(); }

 private:
  std::vector<int> dims_;
  Eigen::VectorXcd amps_;
};

/// Density matrix over an ordered list of subsystems, flattened the same way
/// as PureState. Validated Hermitian within kHermitianTol, unit trace within
/// kTraceTol, and positive semidefinite down to kEigenvalueFloor.
class DensityMatrix {
 public:
  DensityMatrix(std::vector<int> dims, Eigen::MatrixXcd matrix);

  static DensityMatrix from_pure(const PureState& psi);

  const std::vector<int>& dims() const { return dims_; }
  const Eigen::MatrixXcd& matrix() const { return mat_; }
  Eigen::Index side() const { return mat_.rows(); }

 private:
  std::vector<int> dims_;
  Eigen::MatrixXcd mat_;
};

/// Bloch vector of a qubit state; norm <= 1 within kNormTol.
struct BlochVector {
  double bx = 0.0;
  double by = 0.0;
  double bz = 0.0;

  double norm() const;
};

/// Tensor product; the result orders subsystems of `a` before those of `b`.
PureState tensor(const PureState& a, const PureState& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Traces out every subsystem not listed in `keep`. The kept subsystems stay
/// in their original order; `keep` must be non-empty with valid indices.
DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep);

/// Tr(rho^2); lies in [1/D, 1] for side D.
double purity(const DensityMatrix& rho);

/// |<a|b>|^2 for states with identical subsystem structure.
double fidelity_pure(const PureState& a, const PureState& b);

/// Two-qubit concurrence max(0, l1 - l2 - l3 - l4), where the l_i are the
/// decreasing square roots of the spectrum of sqrt(rho) rho_tilde sqrt(rho)
/// and rho_tilde = (sy (x) sy) conj(rho) (sy (x) sy).
double concurrence_2q(const DensityMatrix& rho);

/// Minimal eigenvalue of the partial transpose over one subsystem of a
/// bipartite state. Nonnegative within kEigenvalueFloor certifies
/// separability for two qubits.
double ppt_min_eigenvalue(const DensityMatrix& rho, int transpose_subsystem);

/// (Tr rho sx, Tr rho sy, Tr rho sz) of a qubit state.
BlochVector bloch_vector(const DensityMatrix& rho);

/// Inverse of bloch_vector: (1 + b . sigma) / 2.
DensityMatrix density_from_bloch(const BlochVector& b);

/// Schmidt coefficients (decreasing singular values of the reshaped
/// amplitude matrix) of a bipartite pure state.
Eigen::VectorXd schmidt_coefficients(const PureState& psi);

}  // namespace entwit

#endif  // ENTWIT_QUANTUM_CORE_HPP_
