/**
 * This code is part of entwit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "entwit/quantum_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace entwit {

namespace {

Eigen::Index checked_total_dim(const std::vector<int>& dims) {
  if (dims.empty()) {
    throw std::invalid_argument("state needs at least one subsystem");
  }
  Eigen::Index total = 1;
  for (int d : dims) {
    if (d < 2) {
      throw std::invalid_argument("subsystem dimension must be at least 2, got " +
                                  std::to_string(d));
    }
    total *= d;
  }
  return total;
}

std::vector<int> concat_dims(const std::vector<int>& a,
                             const std::vector<int>& b) {
  std::vector<int> dims = a;
  dims.insert(dims.end(), b.begin(), b.end());
  return dims;
}

/// Row-major strides: stride[i] is the flat-index step of subsystem i.
std::vector<Eigen::Index> strides_of(const std::vector<int>& dims) {
  std::vector<Eigen::Index> strides(dims.size());
  Eigen::Index acc = 1;
  for (std::size_t i = dims.size(); i-- > 0;) {
    strides[i] = acc;
    acc *= dims[i];
  }
  return strides;
}

/// Flat offsets of all multi-indices running over the listed subsystems.
std::vector<Eigen::Index> subset_offsets(
    const std::vector<int>& dims, const std::vector<Eigen::Index>& strides,
    const std::vector<int>& subset) {
  Eigen::Index count = 1;
  for (int s : subset) count *= dims[s];
  std::vector<Eigen::Index> offsets(count, 0);
  Eigen::Index repeat = 1;
  for (std::size_t pos = subset.size(); pos-- > 0;) {
    const int s = subset[pos];
    const int d = dims[s];
    const Eigen::Index stride = strides[s];
    for (Eigen::Index i = 0; i < count; ++i) {
      const Eigen::Index digit = (i / repeat) % d;
      offsets[i] += digit * stride;
    }
    repeat *= d;
  }
  return offsets;
}

Eigen::MatrixXcd hermitian_sqrt(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  Eigen::VectorXd ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    ev(i) = ev(i) > 0.0 ? std::sqrt(ev(i)) : 0.0;
  }
  return es.eigenvectors() * ev.asDiagonal() *
         es.eigenvectors().adjoint();
}

}  // namespace

PureState::PureState(std::vector<int> dims, Eigen::VectorXcd amplitudes)
    : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
  const Eigen::Index total = checked_total_dim(dims_);
  if (amps_.size() != total) {
    throw std::invalid_argument("amplitude count " +
                                std::to_string(amps_.size()) +
                                " does not match total dimension " +
                                std::to_string(total));
  }
  if (std::abs(amps_.squaredNorm() - 1.0) > kNormTol) {
    throw std::invalid_argument("pure state is not normalized");
  }
}

PureState PureState::normalized(std::vector<int> dims,
                                Eigen::VectorXcd amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) {
    throw std::invalid_argument("cannot normalize a zero amplitude vector");
  }
  amplitudes /= norm;
  return PureState(std::move(dims), std::move(amplitudes));
}

PureState PureState::basis_state(std::vector<int> dims, Eigen::Index index) {
  const Eigen::Index total = checked_total_dim(dims);
  if (index < 0 || index >= total) {
    throw std::invalid_argument("basis index out of range");
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(total);
  amps(index) = 1.0;
  return PureState(std::move(dims), std::move(amps));
}

DensityMatrix::DensityMatrix(std::vector<int> dims, Eigen::MatrixXcd matrix)
    : dims_(std::move(dims)), mat_(std::move(matrix)) {
  const Eigen::Index total = checked_total_dim(dims_);
  if (mat_.rows() != total || mat_.cols() != total) {
    throw std::invalid_argument("density matrix shape does not match dims");
  }
  const double herm_dev =
      (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermitianTol) {
    throw std::invalid_argument("density matrix is not Hermitian (deviation " +
                                std::to_string(herm_dev) + ")");
  }
  if (std::abs(mat_.trace().real() - 1.0) > kTraceTol ||
      std::abs(mat_.trace().imag()) > kTraceTol) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat_,
                                                     Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < kEigenvalueFloor) {
    throw std::invalid_argument("density matrix has a negative eigenvalue " +
                                std::to_string(es.eigenvalues().minCoeff()));
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.dims(),
                       psi.amplitudes() * psi.amplitudes().adjoint());
}

double BlochVector::norm() const {
  return std::sqrt(bx * bx + by * by + bz * bz);
}

PureState tensor(const PureState& a, const PureState& b) {
  const Eigen::Index na = a.total_dim();
  const Eigen::Index nb = b.total_dim();
  Eigen::VectorXcd amps(na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    amps.segment(i * nb, nb) = a.amplitudes()(i) * b.amplitudes();
  }
  return PureState(concat_dims(a.dims(), b.dims()), std::move(amps));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  Eigen::MatrixXcd m =
      Eigen::kroneckerProduct(a.matrix(), b.matrix());
  return DensityMatrix(concat_dims(a.dims(), b.dims()), std::move(m));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep) {
  const std::vector<int>& dims = rho.dims();
  const int n_sub = static_cast<int>(dims.size());
  if (keep.empty()) {
    throw std::invalid_argument("keep set must not be empty");
  }
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int s : keep) {
    if (s < 0 || s >= n_sub) {
      throw std::invalid_argument("keep index out of range");
    }
  }
  std::vector<int> traced;
  for (int s = 0; s < n_sub; ++s) {
    if (!std::binary_search(keep.begin(), keep.end(), s)) {
      traced.push_back(s);
    }
  }

  std::vector<int> kept_dims;
  kept_dims.reserve(keep.size());
  for (int s : keep) kept_dims.push_back(dims[s]);
  if (traced.empty()) {
    return DensityMatrix(kept_dims, rho.matrix());
  }

  const std::vector<Eigen::Index> strides = strides_of(dims);
  const std::vector<Eigen::Index> kept_off =
      subset_offsets(dims, strides, keep);
  const std::vector<Eigen::Index> traced_off =
      subset_offsets(dims, strides, traced);

  const Eigen::Index out_side = static_cast<Eigen::Index>(kept_off.size());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(out_side, out_side);
  const Eigen::MatrixXcd& m = rho.matrix();
  for (Eigen::Index r = 0; r < out_side; ++r) {
    for (Eigen::Index c = 0; c < out_side; ++c) {
      Complex acc = 0.0;
      for (const Eigen::Index t : traced_off) {
        acc += m(kept_off[r] + t, kept_off[c] + t);
      }
      out(r, c) = acc;
    }
  }
  return DensityMatrix(std::move(kept_dims), std::move(out));
}

double purity(const DensityMatrix& rho) {
  return rho.matrix().squaredNorm();
}

double fidelity_pure(const PureState& a, const PureState& b) {
  if (a.dims() != b.dims()) {
    throw std::invalid_argument("fidelity requires identical subsystem dims");
  }
  const Complex overlap = a.amplitudes().dot(b.amplitudes());
  return std::norm(overlap);
}

double concurrence_2q(const DensityMatrix& rho) {
  if (rho.dims() != std::vector<int>{2, 2}) {
    throw std::invalid_argument("concurrence is defined for dims [2, 2]");
  }
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;

  const Eigen::MatrixXcd& m = rho.matrix();
  const Eigen::MatrixXcd tilde = yy * m.conjugate() * yy;
  const Eigen::MatrixXcd root = hermitian_sqrt(m);
  const Eigen::MatrixXcd prod = root * tilde * root;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(prod,
                                                     Eigen::EigenvaluesOnly);
  Eigen::Vector4d lams;
  for (Eigen::Index i = 0; i < 4; ++i) {
    const double ev = es.eigenvalues()(i);
    lams(i) = ev > 0.0 ? std::sqrt(ev) : 0.0;
  }
  // Eigenvalues arrive in increasing order.
  const double c = lams(3) - lams(2) - lams(1) - lams(0);
  return c > 0.0 ? c : 0.0;
}

double ppt_min_eigenvalue(const DensityMatrix& rho, int transpose_subsystem) {
  if (rho.dims().size() != 2) {
    throw std::invalid_argument("partial transpose needs exactly 2 subsystems");
  }
  if (transpose_subsystem != 0 && transpose_subsystem != 1) {
    throw std::invalid_argument("transpose_subsystem must be 0 or 1");
  }
  const Eigen::Index da = rho.dims()[0];
  const Eigen::Index db = rho.dims()[1];
  const Eigen::MatrixXcd& m = rho.matrix();
  Eigen::MatrixXcd pt(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      for (Eigen::Index k = 0; k < db; ++k) {
        for (Eigen::Index l = 0; l < db; ++l) {
          if (transpose_subsystem == 0) {
            pt(i * db + k, j * db + l) = m(j * db + k, i * db + l);
          } else {
            pt(i * db + k, j * db + l) = m(i * db + l, j * db + k);
          }
        }
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(pt,
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

BlochVector bloch_vector(const DensityMatrix& rho) {
  if (rho.dims() != std::vector<int>{2}) {
    throw std::invalid_argument("bloch_vector is defined for a single qubit");
  }
  const Eigen::MatrixXcd& m = rho.matrix();
  BlochVector b;
  b.bx = 2.0 * m(0, 1).real();
  b.by = -2.0 * m(0, 1).imag();
  b.bz = (m(0, 0) - m(1, 1)).real();
  if (b.norm() > 1.0 + kNormTol) {
    throw std::invalid_argument("Bloch vector norm exceeds 1");
  }
  return b;
}

DensityMatrix density_from_bloch(const BlochVector& b) {
  if (b.norm() > 1.0 + kNormTol) {
    throw std::invalid_argument("Bloch vector norm exceeds 1");
  }
  Eigen::Matrix2cd m;
  m(0, 0) = 0.5 * (1.0 + b.bz);
  m(1, 1) = 0.5 * (1.0 - b.bz);
  m(0, 1) = 0.5 * Complex(b.bx, -b.by);
  m(1, 0) = 0.5 * Complex(b.bx, b.by);
  return DensityMatrix({2}, m);
}

Eigen::VectorXd schmidt_coefficients(const PureState& psi) {
  if (psi.dims().size() != 2) {
    throw std::invalid_argument("Schmidt decomposition needs 2 subsystems");
  }
  const Eigen::Index da = psi.dims()[0];
  const Eigen::Index db = psi.dims()[1];
  Eigen::MatrixXcd m(da, db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index k = 0; k < db; ++k) {
      m(i, k) = psi.amplitudes()(i * db + k);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues();
}

}  // namespace entwit
