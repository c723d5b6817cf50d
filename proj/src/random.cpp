/**
 * This code is part of entwit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "entwit/random.hpp"

#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace entwit {

namespace {

Eigen::VectorXcd gaussian_vector(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v;
}

}  // namespace

PureState random_pure_state(const std::vector<int>& dims, Rng& rng) {
  Eigen::Index n = 1;
  for (int d : dims) n *= d;
  return PureState::normalized(dims, gaussian_vector(n, rng));
}

DensityMatrix random_density_matrix(const std::vector<int>& dims, Rng& rng) {
  Eigen::Index n = 1;
  for (int d : dims) n *= d;
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  }
  Eigen::MatrixXcd m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(dims, std::move(m));
}

PureState random_product_pure(int d, Rng& rng) {
  const PureState a = random_pure_state({d}, rng);
  const PureState b = random_pure_state({d}, rng);
  return tensor(a, b);
}

DensityMatrix random_separable_state(int d, int max_terms, Rng& rng) {
  if (max_terms < 1) {
    throw std::invalid_argument("max_terms must be at least 1");
  }
  std::uniform_int_distribution<int> term_count(1, max_terms);
  std::exponential_distribution<double> expo(1.0);
  const int terms = term_count(rng);

  std::vector<double> weights(terms);
  double total = 0.0;
  for (double& w : weights) {
    w = expo(rng);
    total += w;
  }

  const Eigen::Index side = static_cast<Eigen::Index>(d) * d;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(side, side);
  for (int t = 0; t < terms; ++t) {
    const PureState prod = random_product_pure(d, rng);
    m += (weights[t] / total) *
         (prod.amplitudes() * prod.amplitudes().adjoint());
  }
  return DensityMatrix({d, d}, std::move(m));
}

}  // namespace entwit
