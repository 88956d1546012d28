// Copyright 2026 the queuewait authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace queuewait {

enum class ServiceLaw { Deterministic, Exponential };

enum class Discipline { Fifo, Lifo, Siro };

/// Single-server queue parameterization: Poisson arrivals at rate lambda,
/// service rate mu, load rho = lambda/mu, mean service time a = 1/mu.
/// Instances only exist with 0 < rho < 1; construct via make_params.
struct QueueParams {
  double lambda = 0.0;
  double mu = 0.0;
  ServiceLaw law = ServiceLaw::Deterministic;
  double rho = 0.0;
  double a = 0.0;
};

/// Second and third raw service-time moments xi = E[S^2], eta = E[S^3].
struct ServiceMoments {
  double xi = 0.0;
  double eta = 0.0;
};

/// Mean and variance of the queueing delay for one (discipline, service law)
/// pair, with the service moments the formulas were evaluated at.
struct MomentSummary {
  double mean = 0.0;
  double variance = 0.0;
  double xi = 0.0;
  double eta = 0.0;
};

/// Validates rates and returns populated parameters.
/// Throws DomainError for nonpositive rates or rho >= 1 (no equilibrium).
QueueParams make_params(double lambda, double mu, ServiceLaw law);

ServiceMoments service_moments(const QueueParams& p);

const char* to_string(Discipline d);
const char* to_string(ServiceLaw law);

}  // namespace queuewait
