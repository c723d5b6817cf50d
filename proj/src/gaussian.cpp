/**
 * This code is part of entwit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "entwit/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "entwit/errors.hpp"

namespace entwit {

namespace {

constexpr double kPi = std::numbers::pi;

void check_width(double value, const char* name) {
  if (!(std::isfinite(value) && value > 0.0)) {
    throw std::invalid_argument(std::string(name) +
                                " must be positive and finite");
  }
}

double fold_half_period(double m) {
  if (!std::isfinite(m)) {
    throw std::invalid_argument("m must be finite");
  }
  double folded = std::fmod(m, kPi);
  if (folded < 0.0) folded += kPi;
  return folded;
}

/// Harmonic combination 2 a^2 b^2 / (a^2 + b^2), safe against overflow of
/// the squares.
double harmonic_exponent(double a, double b) {
  const double inv = 1.0 / (a * a) + 1.0 / (b * b);
  return 2.0 / inv;
}

double sech_squared(double x) {
  const double c = std::cosh(x);
  const double inv = 1.0 / c;
  return inv * inv;
}

}  // namespace

GaussianSingle::GaussianSingle(double sigma_in, double m_in)
    : sigma(sigma_in), m(fold_half_period(m_in)) {
  check_width(sigma, "sigma");
}

GaussianPair::GaussianPair(double sigma_in, double Sigma_in)
    : sigma(sigma_in), Sigma(Sigma_in) {
  check_width(sigma, "sigma");
  check_width(Sigma, "Sigma");
}

ProjectionWidth::ProjectionWidth(double Gamma_in) : Gamma(Gamma_in) {
  check_width(Gamma, "Gamma");
}

DensityMatrix single_qubit_reduced(const GaussianSingle& g) {
  const double damping = std::exp(-2.0 * g.sigma * g.sigma);
  const double bz = damping * std::cos(2.0 * g.m);
  const double bx = damping * std::sin(2.0 * g.m);
  return density_from_bloch({bx, 0.0, bz});
}

GaussianSingle recover_params(const DensityMatrix& rho_b) {
  const BlochVector b = bloch_vector(rho_b);
  if (std::abs(b.by) >= kBlochPlaneTol) {
    throw NotProtocolOutputError(
        "Bloch vector leaves the x-z plane; the state was not produced by "
        "this protocol");
  }
  const double norm_sq = b.bx * b.bx + b.by * b.by + b.bz * b.bz;
  if (norm_sq == 0.0) {
    throw UnrecoverableStateError(
        "fully depolarized qubit: the width estimate diverges");
  }
  if (norm_sq >= 1.0) {
    throw UnrecoverableStateError(
        "pure qubit: the implied width is zero, which no wave packet "
        "produces");
  }
  const double sigma = std::sqrt(-0.25 * std::log(norm_sq));
  const double m = 0.5 * std::atan2(b.bx, b.bz);
  return GaussianSingle(sigma, m);
}

PairAmplitudes pair_amplitudes(const GaussianPair& pair,
                               const ProjectionWidth& width) {
  const double e_sigma = harmonic_exponent(pair.sigma, width.Gamma);
  const double e_Sigma = harmonic_exponent(pair.Sigma, width.Gamma);
  // log D, assembled from hypot to survive widths near the double range.
  const double log_den = std::log(std::hypot(pair.sigma, width.Gamma)) +
                         std::log(std::hypot(pair.Sigma, width.Gamma)) -
                         0.5 * std::log(pair.sigma) -
                         0.5 * std::log(pair.Sigma) - std::log(width.Gamma);
  const double term_sigma = std::exp(-e_sigma - log_den);
  const double term_Sigma = std::exp(-e_Sigma - log_den);
  return {term_sigma + term_Sigma, term_Sigma - term_sigma};
}

CompressedPair two_qubit_state(const GaussianPair& pair,
                               const ProjectionWidth& width) {
  const PairAmplitudes amps = pair_amplitudes(pair, width);
  const double mass =
      amps.a_plus * amps.a_plus + amps.a_minus * amps.a_minus;
  if (mass < kAmplitudeUnderflowTol) {
    throw DegenerateProjectionError(
        "projected amplitudes underflowed; the parameter magnitudes are too "
        "extreme for this window");
  }
  const double inv_norm = 1.0 / std::sqrt(mass);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(0) = amps.a_plus * inv_norm;
  v(3) = amps.a_minus * inv_norm;
  return CompressedPair{PureState({2, 2}, std::move(v)), mass};
}

double purity_input(const GaussianPair& pair) {
  const double ratio = pair.sigma / pair.Sigma;
  return 2.0 / (ratio + 1.0 / ratio);
}

double purity_output(const GaussianPair& pair, const ProjectionWidth& width) {
  const double arg = harmonic_exponent(pair.sigma, width.Gamma) -
                     harmonic_exponent(pair.Sigma, width.Gamma);
  return 0.5 * (sech_squared(arg) + 1.0);
}

double purity_output_limit(const GaussianPair& pair) {
  if (pair.sigma == pair.Sigma) return 1.0;
  const double arg =
      2.0 * (pair.sigma - pair.Sigma) * (pair.sigma + pair.Sigma);
  return 0.5 * (sech_squared(arg) + 1.0);
}

double purity_output_extreme(const ProjectionWidth& width) {
  const double arg = 2.0 * width.Gamma * width.Gamma;
  return 0.5 * (sech_squared(arg) + 1.0);
}

WitnessReport witness_gaussian(const GaussianPair& pair,
                               const ProjectionWidth& width) {
  return witness_report(two_qubit_state(pair, width));
}

}  // namespace entwit
