// Copyright 2026 the queuewait authors
// SPDX-License-Identifier: Apache-2.0

#include "queuewait/lifo_md1.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "queuewait/errors.hpp"
#include "queuewait/quadrature.hpp"

namespace queuewait {
namespace {

constexpr int kMaxSegments = 500;
constexpr double kSegmentQuadTol = 1e-12;  // absolute, per segment
constexpr double kMassCutoff = 1.0 - 1e-12;

void require_deterministic(const QueueParams& p, const char* where) {
  if (p.law != ServiceLaw::Deterministic) {
    throw DomainError(std::string(where) + ": only the deterministic service law has this closed form");
  }
}

double segment_value(int k, double lambda, double a, double x) {
  if (k == 0) return lambda * std::exp(-lambda * x);
  const double dx = x - k * a;
  if (dx <= 0.0) return 0.0;
  // log form: k! overflows at k = 171 and lambda^{k+1} x^{k-1} soon after
  const double log_mag = (k + 1) * std::log(lambda) + (k - 1) * std::log(x) - lambda * x -
                         std::lgamma(k + 1.0);
  return dx * std::exp(log_mag);
}

}  // namespace

double DensitySegment::operator()(double x) const {
  return segment_value(k, lambda, a, x);
}

double PiecewiseAnalyticDensity::density(double x) const {
  if (!(x > 0.0)) throw DomainError("density: x must be positive");
  if (cell_width <= 0.0 || segments.empty()) return 0.0;
  const auto& front = segments.front();
  int k = static_cast<int>(std::floor(x / cell_width));
  if (x - k * cell_width < 0.0) --k;
  return segment_value(k, front.lambda, front.a, x);
}

double PiecewiseAnalyticDensity::cdf(double x) const {
  if (x < 0.0) throw DomainError("cdf: x must be nonnegative");
  double total = atom_mass;
  for (const auto& seg : segments) {
    if (seg.lower() >= x) break;
    const double hi = std::min(seg.upper(), x);
    total += integrate([&](double t) { return seg(t); }, seg.lower(), hi, kSegmentQuadTol, 0.0).value;
  }
  return total;
}

double lifo_density(const QueueParams& p, double x) {
  require_deterministic(p, "lifo_density");
  if (!(x > 0.0)) {
    throw DomainError("lifo_density: x must be positive; the atom at 0 is queried separately");
  }
  int k = static_cast<int>(std::floor(x / p.a));
  if (x - k * p.a < 0.0) --k;
  return segment_value(k, p.lambda, p.a, x);
}

double lifo_cdf(const QueueParams& p, double x) {
  require_deterministic(p, "lifo_cdf");
  if (x < 0.0) throw DomainError("lifo_cdf: x must be nonnegative");
  double total = 1.0 - p.rho;
  if (x == 0.0) return total;
  const int k_last = static_cast<int>(std::floor(x / p.a));
  for (int k = 0; k <= std::min(k_last, kMaxSegments); ++k) {
    const double lo = k * p.a;
    const double hi = std::min((k + 1) * p.a, x);
    if (hi <= lo) break;
    total += integrate([&](double t) { return segment_value(k, p.lambda, p.a, t); }, lo, hi,
                       kSegmentQuadTol, 0.0)
                 .value;
    if (total >= kMassCutoff) break;  // remaining segments carry < 1e-12 mass
  }
  return total;
}

PiecewiseAnalyticDensity lifo_analytic_density(const QueueParams& p, int max_segments) {
  require_deterministic(p, "lifo_analytic_density");
  if (max_segments < 1) throw DomainError("lifo_analytic_density: need at least one segment");
  PiecewiseAnalyticDensity d;
  d.atom_mass = 1.0 - p.rho;
  d.cell_width = p.a;
  d.segments.reserve(static_cast<std::size_t>(max_segments));
  for (int k = 0; k < max_segments; ++k) {
    d.segments.push_back({k, p.lambda, p.a});
  }
  return d;
}

MomentSummary lifo_moments(const QueueParams& p, const ServiceMoments& m) {
  const double r = 1.0 - p.rho;
  MomentSummary out;
  out.xi = m.xi;
  out.eta = m.eta;
  out.mean = p.lambda * m.xi / (2.0 * r);
  out.variance = p.lambda * m.eta / (3.0 * r * r) +
                 p.lambda * p.lambda * m.xi * m.xi * (1.0 + p.rho) / (4.0 * r * r * r);
  return out;
}

MomentSummary fifo_moments(const QueueParams& p, const ServiceMoments& m) {
  const double r = 1.0 - p.rho;
  MomentSummary out;
  out.xi = m.xi;
  out.eta = m.eta;
  out.mean = p.lambda * m.xi / (2.0 * r);
  out.variance = p.lambda * m.eta / (3.0 * r) + p.lambda * p.lambda * m.xi * m.xi / (4.0 * r * r);
  return out;
}

}  // namespace queuewait
