// Copyright 2026 the queuewait authors
// SPDX-License-Identifier: Apache-2.0

#include "queuewait/special.hpp"

#include <cmath>
#include <string>

#include "queuewait/errors.hpp"

namespace queuewait {
namespace {

const double kE = std::exp(1.0);
const double kBranchPoint = -std::exp(-1.0);  // -1/e

// Crossover between the power series and the asymptotic expansion for I1.
constexpr double kBesselCrossover = 25.0;

// I1(x) = sum_{m>=0} (x/2)^{2m+1} / (m! (m+1)!). All terms are positive, so
// the sum never cancels; it just needs enough terms for moderate x.
double i1_power_series(double x) {
  const double h = 0.5 * x;
  double term = h;
  double sum = term;
  for (int m = 1; m < 256; ++m) {
    term *= h * h / (static_cast<double>(m) * (m + 1.0));
    sum += term;
    if (term <= sum * 1e-17) break;
  }
  return sum;
}

// e^{-x} I1(x) ~ (2 pi x)^{-1/2} sum_k c_k / x^k with c_0 = 1 and
// c_{k+1} = c_k ((2k+1)^2 - 4) / (8 (k+1)), truncated at the smallest term.
double i1_scaled_asymptotic(double x) {
  double term = 1.0;
  double sum = term;
  double prev = std::abs(term);
  for (int k = 0; k < 64; ++k) {
    term *= ((2.0 * k + 1.0) * (2.0 * k + 1.0) - 4.0) / (8.0 * (k + 1.0) * x);
    if (std::abs(term) >= prev) break;  // semiconvergent: stop at smallest term
    sum += term;
    prev = std::abs(term);
    if (std::abs(term) <= sum * 1e-18) break;
  }
  return sum / std::sqrt(2.0 * M_PI * x);
}

}  // namespace

double lambert_w0(double x) {
  if (!(x >= kBranchPoint)) {  // also catches NaN
    if (x > kBranchPoint - 1e-15) {
      x = kBranchPoint;
    } else {
      throw DomainError("lambert_w0: x=" + std::to_string(x) + " below branch point -1/e");
    }
  }
  if (x == 0.0) return 0.0;

  double w;
  if (x < -0.25) {
    // Series around the branch point in p = sqrt(2 (e x + 1)).
    const double p = std::sqrt(std::fmax(0.0, 2.0 * (kE * x + 1.0)));
    w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
  } else if (x > kE) {
    const double l1 = std::log(x);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  } else {
    w = x / (1.0 + x);
  }

  const double tol = 1e-15 * std::fmax(1.0, std::abs(x));
  for (int it = 0; it < 64; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (std::abs(f) <= tol) return w;
    const double wp1 = w + 1.0;
    // Halley step for f(w) = w e^w - x.
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    w -= f / denom;
  }
  const double residual = std::abs(w * std::exp(w) - x);
  if (residual > 1e-14 * std::fmax(1.0, std::abs(x))) {
    throw PrecisionError("lambert_w0: Halley iteration stalled at x=" + std::to_string(x));
  }
  return w;
}

double borel_pmf(int k, double rho) {
  if (k < 1) {
    throw DomainError("borel_pmf: k must be >= 1, got " + std::to_string(k));
  }
  if (!(rho > 0.0) || !(rho < 1.0)) {
    throw DomainError("borel_pmf: rho must lie in (0,1), got " + std::to_string(rho));
  }
  const double kr = k * rho;
  return std::exp(-kr + (k - 1) * std::log(kr) - std::lgamma(k + 1.0));
}

BorelPmf BorelPmf::truncated(double rho, double tail_tol, int min_terms) {
  BorelPmf pmf;
  pmf.rho = rho;
  constexpr int kMaxTerms = 200000;
  for (int k = 1; k <= kMaxTerms; ++k) {
    const double t = borel_pmf(k, rho);
    pmf.terms.push_back(t);
    if (k >= min_terms && t < tail_tol) break;
  }
  return pmf;
}

double BorelPmf::term(int k) const {
  if (k < 1 || k > static_cast<int>(terms.size())) return 0.0;
  return terms[static_cast<std::size_t>(k) - 1];
}

double BorelPmf::total_mass() const {
  double sum = 0.0;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) sum += *it;
  return sum;
}

double BorelPmf::mean() const {
  double sum = 0.0;
  for (int k = static_cast<int>(terms.size()); k >= 1; --k) {
    sum += k * terms[static_cast<std::size_t>(k) - 1];
  }
  return sum;
}

double bessel_i1(double x) {
  if (!(x >= 0.0)) {
    throw DomainError("bessel_i1: x must be >= 0, got " + std::to_string(x));
  }
  if (x < kBesselCrossover) return i1_power_series(x);
  return i1_scaled_asymptotic(x) * std::exp(x);
}

double bessel_i1_scaled(double x) {
  if (!(x >= 0.0)) {
    throw DomainError("bessel_i1_scaled: x must be >= 0, got " + std::to_string(x));
  }
  if (x < kBesselCrossover) return i1_power_series(x) * std::exp(-x);
  return i1_scaled_asymptotic(x);
}

}  // namespace queuewait
