/**
 * This code is part of entwit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef ENTWIT_KERNELS_HPP_
#define ENTWIT_KERNELS_HPP_

#include <complex>
#include <cstddef>
#include <span>

namespace entwit {

/// Selects the plain serial reference path or the OpenMP kernel. The two
/// paths of any given routine are compared by the test suite and timed
/// against each other by the bench target.
enum class Exec {
  kSerial,
  kParallel,
};

namespace kernels {

/// Values are summed inside fixed-size blocks in index order and the block
/// partials are combined pairwise, so the result does not depend on the
/// number of threads.
inline constexpr std::size_t kReductionBlock = 1024;

/// Plain left-to-right accumulation (reference path).
double sum_serial(std::span<const double> values);
std::complex<double> sum_serial(std::span<const std::complex<double>> values);

/// Deterministic blocked pairwise sum, serial execution.
double sum_blocked(std::span<const double> values);
std::complex<double> sum_blocked(std::span<const std::complex<double>> values);

/// Deterministic blocked pairwise sum with the block loop parallelized.
/// Bitwise identical to sum_blocked for any thread count.
double sum_blocked_parallel(std::span<const double> values);
std::complex<double> sum_blocked_parallel(
    std::span<const std::complex<double>> values);

/// Pairwise combination of per-block partial sums, in place.
double pairwise_combine(std::span<double> partials);
std::complex<double> pairwise_combine(
    std::span<std::complex<double>> partials);

}  // namespace kernels
}  // namespace entwit

#endif  // ENTWIT_KERNELS_HPP_
