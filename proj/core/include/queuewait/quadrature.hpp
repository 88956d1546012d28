// Copyright 2026 the queuewait authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "queuewait/errors.hpp"

namespace queuewait {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

namespace detail {

// Gauss-Kronrod 7/15 pair (QUADPACK dqk15 abscissae/weights on [-1, 1]).
// Kronrod nodes at odd indices plus the midpoint form the embedded Gauss-7
// rule. All nodes are interior, so endpoints are never evaluated.
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename F>
std::pair<double, double> gk15(const F& f, double lo, double hi, long& evals) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(mid);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double f1 = f(mid - dx);
    const double f2 = f(mid + dx);
    kronrod += kKronrodWeights[i] * (f1 + f2);
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (f1 + f2);
  }
  evals += 15;
  kronrod *= half;
  gauss *= half;
  if (!std::isfinite(kronrod)) {
    throw QuadratureError("integrand returned a non-finite value on [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return {kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [lo, hi]. The worst
/// segment is bisected until the summed error estimate meets
/// max(abs_tol, rel_tol * |integral|). Throws QuadratureError when the
/// segment budget runs out first.
template <typename F>
QuadratureResult integrate(const F& f, double lo, double hi, double abs_tol = 1e-12,
                           double rel_tol = 1e-12, int max_segments = 4000) {
  QuadratureResult out;
  if (lo == hi) return out;
  double sign = 1.0;
  if (lo > hi) {
    std::swap(lo, hi);
    sign = -1.0;
  }

  struct Segment {
    double lo, hi, value, error;
    bool operator<(const Segment& other) const { return error < other.error; }
  };

  auto [v0, e0] = detail::gk15(f, lo, hi, out.evaluations);
  std::priority_queue<Segment> segments;
  segments.push({lo, hi, v0, e0});
  double total_value = v0;
  double total_error = e0;

  while (total_error > std::fmax(abs_tol, rel_tol * std::abs(total_value))) {
    if (static_cast<int>(segments.size()) >= max_segments) {
      throw QuadratureError("integrate: tolerance not reached with " +
                            std::to_string(max_segments) + " segments (err=" +
                            std::to_string(total_error) + ")");
    }
    const Segment worst = segments.top();
    segments.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) {
      throw QuadratureError("integrate: interval cannot be subdivided further near " +
                            std::to_string(mid));
    }
    auto [vl, el] = detail::gk15(f, worst.lo, mid, out.evaluations);
    auto [vr, er] = detail::gk15(f, mid, worst.hi, out.evaluations);
    total_value += vl + vr - worst.value;
    total_error += el + er - worst.error;
    segments.push({worst.lo, mid, vl, el});
    segments.push({mid, worst.hi, vr, er});
  }

  out.value = sign * total_value;
  out.error_estimate = total_error;
  return out;
}

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

/// Applies a Gauss-Legendre rule to f over [lo, hi]. The rule is open: no
/// endpoint of the interval is ever evaluated.
template <typename F>
double fixed_gauss_legendre(const F& f, double lo, double hi, const GaussLegendreRule& rule) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

}  // namespace queuewait
