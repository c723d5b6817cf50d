/**
 * This code is part of entwit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef ENTWIT_ERRORS_HPP_
#define ENTWIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace entwit {

/// Post-selection succeeded with probability (or relative density) too close
/// to zero for the output state to be defined.
class DegenerateProjectionError : public std::runtime_error {
 public:
  explicit DegenerateProjectionError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A quadrature grid request exceeded the configured point budget.
class GridTooLargeError : public std::runtime_error {
 public:
  explicit GridTooLargeError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Parameter recovery has no defined answer for this state (for example a
/// fully depolarized qubit, whose width estimate diverges).
class UnrecoverableStateError : public std::domain_error {
 public:
  explicit UnrecoverableStateError(const std::string& what)
      : std::domain_error(what) {}
};

/// The state handed to a recovery routine cannot have been produced by the
/// protocol (its Bloch vector leaves the x-z plane).
class NotProtocolOutputError : public std::domain_error {
 public:
  explicit NotProtocolOutputError(const std::string& what)
      : std::domain_error(what) {}
};

/// A sweep configuration failed validation before any computation started.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Reading or writing a sweep artifact failed.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace entwit

#endif  // ENTWIT_ERRORS_HPP_
