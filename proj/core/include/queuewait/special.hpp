// Copyright 2026 the queuewait authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace queuewait {

/// Principal branch of the Lambert omega function: the w >= -1 solving
/// w * exp(w) = x. Defined for x >= -1/e; the result satisfies
/// |w e^w - x| <= 1e-14 * max(1, |x|).
/// Throws DomainError below the branch point.
double lambert_w0(double x);

/// Borel busy-period probability e^{-k rho} (k rho)^{k-1} / k! for k >= 1.
/// Evaluated in log space; direct factorials would overflow near k = 171.
double borel_pmf(int k, double rho);

/// Truncated Borel distribution. terms[i] is the probability that a busy
/// period serves exactly i+1 customers.
struct BorelPmf {
  double rho = 0.0;
  std::vector<double> terms;

  /// Keeps terms until they drop below tail_tol, with at least min_terms.
  static BorelPmf truncated(double rho, double tail_tol = 1e-16, int min_terms = 50);

  double term(int k) const;  // k >= 1; 0 beyond the truncation
  double total_mass() const;
  double mean() const;
};

/// Modified Bessel function of the first kind, order one. Power series below
/// the series/asymptotic crossover, scaled asymptotic expansion above it;
/// relative error <= 1e-12 on x >= 0.
double bessel_i1(double x);

/// exp(-x) * I1(x). Stays finite for large x where I1 itself overflows.
double bessel_i1_scaled(double x);

}  // namespace queuewait
