// Copyright 2026 the queuewait authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace queuewait {

/// Input outside the mathematical domain of an operation (rho >= 1, negative
/// time, Lambert argument below the branch point, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed quantity failed its convergence or cancellation guard.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature could not reach the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid simulation configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Histogram and analytic bin layouts do not match.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace queuewait
