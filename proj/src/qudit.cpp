/**
 * This code is part of entwit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "entwit/qudit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "entwit/errors.hpp"

namespace entwit {

namespace {

constexpr double kPi = std::numbers::pi;

int pair_dim(const std::vector<int>& dims) {
  if (dims.size() != 2 || dims[0] != dims[1]) {
    throw std::invalid_argument("pair compression needs dims [d, d]");
  }
  return dims[0];
}

/// 2 x d matrix whose rows are (cos xi_j) and (sin xi_j): the amplitudes a
/// qudit level j contributes to qubit levels 0 and 1 after the controlled
/// rotation and uniform projection.
Eigen::MatrixXd rotation_rows(const CrotAngles& angles) {
  Eigen::MatrixXd a(2, angles.d);
  for (int j = 0; j < angles.d; ++j) {
    a(0, j) = std::cos(angles.xi[j]);
    a(1, j) = std::sin(angles.xi[j]);
  }
  return a;
}

}  // namespace

CrotAngles::CrotAngles(int d_in) : d(d_in) {
  if (d < 2) {
    throw std::invalid_argument("controlled rotation needs d >= 2, got " +
                                std::to_string(d));
  }
  xi.resize(d);
  for (int j = 0; j < d; ++j) {
    xi[j] = (kPi * j) / (2.0 * (d - 1));
  }
}

BernoulliParams::BernoulliParams(int d_in, double p_in) : d(d_in), p(p_in) {
  if (d < 2) {
    throw std::invalid_argument("Bernoulli probe needs d >= 2, got " +
                                std::to_string(d));
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("p must lie in [0, 1]");
  }
}

DensityMatrix CompressedPair::as_density() const {
  if (is_pure()) {
    return DensityMatrix::from_pure(pure());
  }
  return density();
}

Eigen::MatrixXcd crot_unitary(const CrotAngles& angles) {
  const int d = angles.d;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(2 * d, 2 * d);
  for (int j = 0; j < d; ++j) {
    const double c = std::cos(angles.xi[j]);
    const double s = std::sin(angles.xi[j]);
    u(2 * j, 2 * j) = c;
    u(2 * j, 2 * j + 1) = -s;
    u(2 * j + 1, 2 * j) = s;
    u(2 * j + 1, 2 * j + 1) = c;
  }
  return u;
}

PureState bernoulli_state(const BernoulliParams& params) {
  const int d = params.d;
  const double p = params.p;
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(d);
  if (p == 0.0) {
    amps(0) = 1.0;
  } else if (p == 1.0) {
    amps(d - 1) = 1.0;
  } else {
    const int n = d - 1;
    for (int k = 0; k <= n; ++k) {
      const double log_weight = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                                std::lgamma(n - k + 1.0) + k * std::log(p) +
                                (n - k) * std::log1p(-p);
      amps(k) = std::exp(0.5 * log_weight);
    }
  }
  return PureState::normalized({d}, std::move(amps));
}

DensityMatrix compress_single(const PureState& psi_a) {
  if (psi_a.dims().size() != 1) {
    throw std::invalid_argument("compress_single takes a single qudit");
  }
  const int d = psi_a.dims()[0];
  const CrotAngles angles(d);

  // Joint state after the controlled rotation on psi (x) |0>, kept as per-j
  // qubit blocks; the qudit trace is the sum of block projectors.
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (int j = 0; j < d; ++j) {
    const Complex cj = psi_a.amplitudes()(j);
    const Complex b0 = cj * std::cos(angles.xi[j]);
    const Complex b1 = cj * std::sin(angles.xi[j]);
    rho(0, 0) += b0 * std::conj(b0);
    rho(0, 1) += b0 * std::conj(b1);
    rho(1, 0) += b1 * std::conj(b0);
    rho(1, 1) += b1 * std::conj(b1);
  }
  return DensityMatrix({2}, rho);
}

double estimate_p(const DensityMatrix& rho_b, int d) {
  if (rho_b.dims() != std::vector<int>{2}) {
    throw std::invalid_argument("estimate_p takes a single-qubit state");
  }
  if (d < 2) {
    throw std::invalid_argument("estimate_p needs d >= 2");
  }
  double tz = (rho_b.matrix()(0, 0) - rho_b.matrix()(1, 1)).real();
  tz = std::clamp(tz, -1.0, 1.0);
  return std::acos(tz) / kPi;
}

PureState plus_state(int d) {
  if (d < 2) {
    throw std::invalid_argument("plus_state needs d >= 2");
  }
  Eigen::VectorXcd amps =
      Eigen::VectorXcd::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
  return PureState({d}, std::move(amps));
}

CompressedPair compress_pair_pure(const PureState& psi_aa) {
  const int d = pair_dim(psi_aa.dims());
  const Eigen::MatrixXd a = rotation_rows(CrotAngles(d));

  Eigen::MatrixXcd psi(d, d);
  for (int j = 0; j < d; ++j) {
    for (int l = 0; l < d; ++l) {
      psi(j, l) = psi_aa.amplitudes()(static_cast<Eigen::Index>(j) * d + l);
    }
  }

  // Projecting each qudit onto the uniform superposition contributes 1/d.
  const Eigen::Matrix2cd b =
      (a.cast<Complex>() * psi * a.transpose().cast<Complex>()) /
      static_cast<double>(d);
  const double success = b.squaredNorm();
  if (success < kDegenerateProjectionTol) {
    throw DegenerateProjectionError(
        "post-selection probability " + std::to_string(success) +
        " is degenerate");
  }

  Eigen::VectorXcd amps(4);
  amps << b(0, 0), b(0, 1), b(1, 0), b(1, 1);
  amps /= std::sqrt(success);
  return CompressedPair{PureState({2, 2}, std::move(amps)), success};
}

CompressedPair compress_pair_mixed(const DensityMatrix& rho_aa) {
  const int d = pair_dim(rho_aa.dims());
  const Eigen::MatrixXd a = rotation_rows(CrotAngles(d));
  const Eigen::MatrixXd k = Eigen::kroneckerProduct(a, a);

  Eigen::MatrixXcd reduced =
      k.cast<Complex>() * rho_aa.matrix() * k.transpose().cast<Complex>();
  const double trace = reduced.trace().real();
  const double success = trace / (static_cast<double>(d) * d);
  if (success < kDegenerateProjectionTol) {
    throw DegenerateProjectionError(
        "post-selection probability " + std::to_string(success) +
        " is degenerate");
  }
  reduced /= trace;
  // Round away the rounding skew so validation sees an exact Hermitian form.
  const Eigen::MatrixXcd symmetrized = 0.5 * (reduced + reduced.adjoint());
  return CompressedPair{DensityMatrix({2, 2}, symmetrized), success};
}

WitnessReport witness_report(const CompressedPair& pair) {
  const DensityMatrix rho = pair.as_density();
  WitnessReport report;
  report.concurrence = concurrence_2q(rho);
  report.ppt_min_eig = ppt_min_eigenvalue(rho, 0);
  report.output_subsystem_purity = purity(partial_trace(rho, {0}));
  report.success_probability = pair.success_probability;
  report.entangled = report.concurrence > kEntanglementTol;
  return report;
}

WitnessReport witness_qudit_pair(const DensityMatrix& rho_aa) {
  return witness_report(compress_pair_mixed(rho_aa));
}

double bell_overlap(int d) {
  if (d < 2) {
    throw std::invalid_argument("bell_overlap needs d >= 2");
  }
  const CrotAngles angles(d);
  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));
  double s_c = 0.0;
  double s_cs = 0.0;
  double s_s = 0.0;
  for (int j = 0; j < d; ++j) {
    const double c = std::cos(angles.xi[j]);
    const double s = std::sin(angles.xi[j]);
    s_c += c * c;
    s_cs += c * s;
    s_s += s * s;
  }
  s_c *= inv_sqrt_d;
  s_cs *= inv_sqrt_d;
  s_s *= inv_sqrt_d;

  const double bell_component = 0.5 * (s_c + s_s) * (s_c + s_s);
  const double norm = s_c * s_c + 2.0 * s_cs * s_cs + s_s * s_s;
  return bell_component / norm;
}

double bell_overlap_asymptote() {
  return kPi * kPi / (kPi * kPi + 4.0);
}

PureState multiqubit_relabel(const PureState& psi) {
  for (int d : psi.dims()) {
    if (d != 2) {
      throw std::invalid_argument("relabeling requires qubit subsystems");
    }
  }
  const int total = static_cast<int>(psi.total_dim());
  return PureState({total}, psi.amplitudes());
}

}  // namespace entwit
