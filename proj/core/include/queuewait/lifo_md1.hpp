// Copyright 2026 the queuewait authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "queuewait/params.hpp"

namespace queuewait {

/// One closed-form piece of the M/D/1-LIFO waiting density, valid on the open
/// interval (k a, (k+1) a):
///   k = 0:   lambda e^{-lambda x}
///   k >= 1:  (1/k!) lambda^{k+1} x^{k-1} (x - k a) e^{-lambda x}
struct DensitySegment {
  int k = 0;
  double lambda = 0.0;
  double a = 0.0;

  double lower() const { return k * a; }
  double upper() const { return (k + 1) * a; }
  double operator()(double x) const;
};

/// Probability atom at zero plus per-interval analytic density pieces.
/// Jump points x = k a evaluate to the right limit (0 for k >= 1).
struct PiecewiseAnalyticDensity {
  double atom_mass = 0.0;
  double cell_width = 0.0;  // a
  std::vector<DensitySegment> segments;

  double density(double x) const;  // continuous part only; throws for x <= 0
  double cdf(double x) const;
};

/// M/D/1-LIFO waiting-time density at x > 0 (continuous part; the atom 1-rho
/// at zero is queried via lifo_cdf(0) or the piecewise struct).
double lifo_density(const QueueParams& p, double x);

/// Atom plus integrated density up to x; nondecreasing, -> 1 as x grows.
double lifo_cdf(const QueueParams& p, double x);

/// Materializes the atom and the first max_segments density pieces.
PiecewiseAnalyticDensity lifo_analytic_density(const QueueParams& p, int max_segments = 500);

/// mean = lambda xi / (2 (1-rho));
/// variance = lambda eta / (3 (1-rho)^2) + lambda^2 xi^2 (1+rho) / (4 (1-rho)^3).
MomentSummary lifo_moments(const QueueParams& p, const ServiceMoments& m);

/// Same mean as LIFO;
/// variance = lambda eta / (3 (1-rho)) + lambda^2 xi^2 / (4 (1-rho)^2).
MomentSummary fifo_moments(const QueueParams& p, const ServiceMoments& m);

}  // namespace queuewait
