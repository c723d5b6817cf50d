/**
 * This code is part of entwit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef ENTWIT_RANDOM_HPP_
#define ENTWIT_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "entwit/quantum_core.hpp"

namespace entwit {

using Rng = std::mt19937_64;

/// Haar-random pure state: i.i.d. complex Gaussian amplitudes, normalized.
PureState random_pure_state(const std::vector<int>& dims, Rng& rng);

/// Full-rank random density matrix G G^dag / Tr(G G^dag) with Ginibre G.
DensityMatrix random_density_matrix(const std::vector<int>& dims, Rng& rng);

/// Product of two independent Haar-random qudit pure states.
PureState random_product_pure(int d, Rng& rng);

/// Convex mixture of up to max_terms Haar-random pure product states with
/// uniform simplex (Dirichlet) weights. Separable by construction.
DensityMatrix random_separable_state(int d, int max_terms, Rng& rng);

}  // namespace entwit

#endif  // ENTWIT_RANDOM_HPP_
