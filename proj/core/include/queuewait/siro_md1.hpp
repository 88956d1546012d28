// Copyright 2026 the queuewait authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "queuewait/params.hpp"

namespace queuewait {

// Default truncations, sized for loads around 2/3. Both are exposed as
// parameters everywhere; the convergence guard in siro_cell_densities
// rejects values that are too small for the requested output.
inline constexpr int kDefaultQueueTruncation = 80;    // N: states P_0..P_N
inline constexpr int kDefaultPoissonTruncation = 60;  // m: Poisson terms per step

/// Stationary queue-length probabilities P_0..P_N of the embedded M/D/1 chain
/// at unit service time (mu = 1), 0 < lambda_b < 1:
///   P_0 = 1 - lambda, P_1 = P_0 e^lambda - P_0,
///   P_n = P_{n-1} e^lambda - (P_0+P_1) lambda^{n-1}/(n-1)!
///         - sum_{j=2}^{n-1} P_j lambda^{n-j}/(n-j)!   (empty sum at n = 2).
/// Subtraction terms are accumulated with compensated summation; if any P_n
/// still drops below -1e-6 the recursion is rerun in extended precision, and
/// PrecisionError is thrown if that also fails.
std::vector<double> burke_p_vector(double lambda_b, int n_max);

/// Conditional service-selection table Q_i(n, m):
///   Q_0(n,m) = 1/n,  Q_i(1,m) = delta_i,
///   Q_i(n,m) = (1 - 1/n) e^{-lambda} sum_{k=0}^{m} lambda^k/k! Q_{i-1}(n+k-1, m).
/// Reads outside 1 <= n <= n_max resolve to 0 (rectangular truncation).
struct BurkeQTable {
  int i_max = 0;
  int n_max = 0;
  int m = 0;
  std::vector<double> values;  // row-major, (i_max+1) x n_max

  double at(int i, int n) const {
    if (i < 0 || i > i_max || n < 1 || n > n_max) return 0.0;
    return values[static_cast<std::size_t>(i) * n_max + n - 1];
  }
};

BurkeQTable burke_q_table(double lambda_b, int i_max, int n_max, int m);

/// P vector and Q table for one lambda_b, ready to evaluate H(t, m).
struct BurkeState {
  double lambda_b = 0.0;
  std::vector<double> p;
  BurkeQTable q;

  /// Waiting-time CDF in Burke units (service time 1):
  ///   H(t,m) = (1-lambda) + lambda sum_{n>=1} P_{n-1}
  ///            [ (t - floor t) Q_{floor t}(n,m) + sum_{i<floor t} Q_i(n,m) ].
  /// Requires floor(t) <= q.i_max.
  double cdf(double t) const;
};

BurkeState make_burke_state(double lambda_b, int i_max, int n_max, int m);

/// H(t, m) for a single t; builds the state with exactly the rows needed.
double siro_cdf(double lambda_b, double t, int m = kDefaultPoissonTruncation,
                int n_max = kDefaultQueueTruncation);

/// Piecewise-constant density: an atom at zero plus constant cell values
/// c_1..c_J on the half-open intervals [(j-1) w, j w).
struct StepDensity {
  double atom_mass = 0.0;
  double cell_width = 0.0;
  std::vector<double> cells;

  double density(double x) const;  // 0 beyond the last cell; throws for x < 0
  double mass() const;             // atom + width * sum(cells)
};

/// Rescaled M/D/1-SIRO cell densities c_j = mu lambda_b sum_n P_{n-1} Q_{j-1}(n,m)
/// on intervals of width a, with atom 1 - rho. Throws PrecisionError when
/// growing m by 10 still moves any requested cell by more than 1e-6.
StepDensity siro_cell_densities(const QueueParams& p, int j_cells,
                                int m = kDefaultPoissonTruncation,
                                int n_max = kDefaultQueueTruncation);

/// mean = lambda xi / (2 (1-rho));
/// variance = 2 lambda eta / (3 (1-rho)(2-rho))
///            + lambda^2 xi^2 (2+rho) / (4 (1-rho)^2 (2-rho)).
MomentSummary siro_moments(const QueueParams& p, const ServiceMoments& m);

}  // namespace queuewait
