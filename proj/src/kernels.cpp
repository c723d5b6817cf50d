/**
 * This code is part of entwit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "entwit/kernels.hpp"

#include <vector>

namespace entwit {
namespace kernels {

namespace {

template <typename T>
T sum_serial_impl(std::span<const T> values) {
  T acc{};
  for (const T& v : values) acc += v;
  return acc;
}

template <typename T>
T pairwise_combine_impl(std::span<T> partials) {
  std::size_t count = partials.size();
  if (count == 0) return T{};
  while (count > 1) {
    const std::size_t half = count / 2;
    for (std::size_t i = 0; i < half; ++i) {
      partials[i] = partials[2 * i] + partials[2 * i + 1];
    }
    if (count % 2 == 1) {
      partials[half] = partials[count - 1];
      count = half + 1;
    } else {
      count = half;
    }
  }
  return partials[0];
}

template <typename T, bool Parallel>
T sum_blocked_impl(std::span<const T> values) {
  const std::size_t n = values.size();
  if (n == 0) return T{};
  const std::size_t blocks = (n + kReductionBlock - 1) / kReductionBlock;
  std::vector<T> partials(blocks);
#pragma omp parallel for schedule(static) if (Parallel)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
    const std::size_t begin = static_cast<std::size_t>(b) * kReductionBlock;
    const std::size_t end = std::min(begin + kReductionBlock, n);
    T acc{};
    for (std::size_t i = begin; i < end; ++i) acc += values[i];
    partials[static_cast<std::size_t>(b)] = acc;
  }
  return pairwise_combine_impl<T>(partials);
}

}  // namespace

double sum_serial(std::span<const double> values) {
  return sum_serial_impl(values);
}

std::complex<double> sum_serial(std::span<const std::complex<double>> values) {
  return sum_serial_impl(values);
}

double sum_blocked(std::span<const double> values) {
  return sum_blocked_impl<double, false>(values);
}

std::complex<double> sum_blocked(
    std::span<const std::complex<double>> values) {
  return sum_blocked_impl<std::complex<double>, false>(values);
}

double sum_blocked_parallel(std::span<const double> values) {
  return sum_blocked_impl<double, true>(values);
}

std::complex<double> sum_blocked_parallel(
    std::span<const std::complex<double>> values) {
  return sum_blocked_impl<std::complex<double>, true>(values);
}

double pairwise_combine(std::span<double> partials) {
  return pairwise_combine_impl(partials);
}

std::complex<double> pairwise_combine(
    std::span<std::complex<double>> partials) {
  return pairwise_combine_impl(partials);
}

}  // namespace kernels
}  // namespace entwit
