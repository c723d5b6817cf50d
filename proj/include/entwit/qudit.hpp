/**
 * This code is part of entwit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef ENTWIT_QUDIT_HPP_
#define ENTWIT_QUDIT_HPP_

#include <variant>
#include <vector>

#include "entwit/quantum_core.hpp"

namespace entwit {

/// Post-selection probabilities (or relative densities) below this value
/// leave no usable output state.
inline constexpr double kDegenerateProjectionTol = 1e-14;

/// Controlled-rotation angles xi_j = j * pi / (2 (d - 1)) for j < d.
struct CrotAngles {
  explicit CrotAngles(int d);

  int d;
  std::vector<double> xi;
};

/// Binomial amplitude profile parameters for a d-level probe state.
struct BernoulliParams {
  BernoulliParams(int d, double p);

  int d;
  double p;
};

/// Output of a pair compression step: a two-qubit state together with the
/// post-selection success probability (relative density for the
/// continuous-variable protocol). The carrier is pure or mixed depending on
/// the input.
struct CompressedPair {
  std::variant<PureState, DensityMatrix> state;
  double success_probability = 0.0;

  bool is_pure() const { return std::holds_alternative<PureState>(state); }
  const PureState& pure() const { return std::get<PureState>(state); }
  const DensityMatrix& density() const { return std::get<DensityMatrix>(state); }

  /// The carried state as a density matrix (projector for a pure carrier).
  DensityMatrix as_density() const;
};

/// Entanglement verdict for a compressed pair. `entangled` is true exactly
/// when the concurrence exceeds kEntanglementTol; on two qubits the partial
/// transpose test agrees in sign.
struct WitnessReport {
  bool entangled = false;
  double concurrence = 0.0;
  double ppt_min_eig = 0.0;
  double output_subsystem_purity = 0.0;
  double success_probability = 0.0;
};

/// Block-diagonal unitary sum_j |j><j| (x) R(xi_j) on a qudit-qubit pair,
/// where R(t) rotates |0> to cos(t)|0> + sin(t)|1>.
Eigen::MatrixXcd crot_unitary(const CrotAngles& angles);

/// Probe state sum_k sqrt(C(d-1,k) p^k (1-p)^(d-1-k)) |k>. Binomial weights
/// are evaluated in log space, so large d stays finite.
PureState bernoulli_state(const BernoulliParams& params);

/// Couples the qudit to a fresh qubit with the controlled rotation and
/// traces the qudit out, leaving the qubit as a mixture of 2x2 rotation
/// projectors weighted by the qudit populations.
DensityMatrix compress_single(const PureState& psi_a);

/// Estimates the Bernoulli parameter from a compressed qubit as
/// arccos(Tr rho sz) / pi (exact in the large-d limit). The trace is clamped
/// to [-1, 1] before the arccos.
double estimate_p(const DensityMatrix& rho_b, int d);

/// Uniform superposition (1/sqrt(d)) sum_k |k>.
PureState plus_state(int d);

/// Compresses a pure two-qudit state: both qudits are coupled to fresh
/// qubits, projected onto the uniform superposition, and discarded. Raises
/// DegenerateProjectionError when the post-selection probability falls below
/// kDegenerateProjectionTol.
CompressedPair compress_pair_pure(const PureState& psi_aa);

/// Mixed-state version of compress_pair_pure.
CompressedPair compress_pair_mixed(const DensityMatrix& rho_aa);

/// Witness metrics for an already compressed pair.
WitnessReport witness_report(const CompressedPair& pair);

/// Compresses a two-qudit state and evaluates the entanglement witness on
/// the two-qubit output. Detection certifies entanglement of the input;
/// a negative verdict proves nothing, since compression can wash out
/// entanglement.
WitnessReport witness_qudit_pair(const DensityMatrix& rho_aa);

/// Overlap of the compressed maximally entangled two-qudit state with the
/// two-qubit Bell state (|00> + |11>)/sqrt(2), via the closed-form angle
/// sums (O(d) work).
double bell_overlap(int d);

/// Large-d limit of bell_overlap: pi^2 / (pi^2 + 4).
double bell_overlap_asymptote();

/// Reinterprets an n-qubit register as a single qudit of dimension 2^n.
/// Amplitude order is preserved (big-endian qubit significance).
PureState multiqubit_relabel(const PureState& psi);

}  // namespace entwit

#endif  // ENTWIT_QUDIT_HPP_
