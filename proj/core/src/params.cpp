// Copyright 2026 the queuewait authors
// SPDX-License-Identifier: Apache-2.0

#include "queuewait/params.hpp"

#include <string>

#include "queuewait/errors.hpp"

namespace queuewait {
namespace {

// Every analytic series downstream converges geometrically only for rho
// strictly below 1, so loads this close to saturation are rejected outright.
constexpr double kMaxRho = 1.0 - 1e-12;

}  // namespace

QueueParams make_params(double lambda, double mu, ServiceLaw law) {
  if (!(lambda > 0.0) || !(mu > 0.0)) {
    throw DomainError("make_params: rates must be positive (lambda=" +
                      std::to_string(lambda) + ", mu=" + std::to_string(mu) + ")");
  }
  const double rho = lambda / mu;
  if (rho >= kMaxRho) {
    throw DomainError("make_params: no equilibrium at rho=" + std::to_string(rho));
  }
  QueueParams p;
  p.lambda = lambda;
  p.mu = mu;
  p.law = law;
  p.rho = rho;
  p.a = 1.0 / mu;
  return p;
}

ServiceMoments service_moments(const QueueParams& p) {
  ServiceMoments m;
  switch (p.law) {
    case ServiceLaw::Deterministic:
      m.xi = p.a * p.a;
      m.eta = p.a * p.a * p.a;
      break;
    case ServiceLaw::Exponential:
      m.xi = 2.0 / (p.mu * p.mu);
      m.eta = 6.0 / (p.mu * p.mu * p.mu);
      break;
  }
  return m;
}

const char* to_string(Discipline d) {
  switch (d) {
    case Discipline::Fifo: return "fifo";
    case Discipline::Lifo: return "lifo";
    case Discipline::Siro: return "siro";
  }
  return "?";
}

const char* to_string(ServiceLaw law) {
  switch (law) {
    case ServiceLaw::Deterministic: return "deterministic";
    case ServiceLaw::Exponential: return "exponential";
  }
  return "?";
}

}  // namespace queuewait
