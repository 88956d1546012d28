// Copyright 2026 the queuewait authors
// SPDX-License-Identifier: Apache-2.0

#include "queuewait/siro_md1.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "queuewait/errors.hpp"

namespace queuewait {
namespace {

constexpr double kCancellationFloor = -1e-6;
constexpr double kCellConvergenceTol = 1e-6;
constexpr double kPoissonTailTol = 1e-14;

template <typename Real>
struct CompensatedSum {
  Real sum = 0;
  Real carry = 0;
  void add(Real x) {
    const Real y = x - carry;
    const Real t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// The recursion subtracts nearly equal terms scaled by e^{n lambda}; roundoff
// settles into a constant-size mode, so deep-tail entries can go slightly
// negative. Values below kCancellationFloor mean the precision budget is gone.
template <typename Real>
std::vector<Real> p_vector_impl(Real lambda, int n_max) {
  std::vector<Real> p(static_cast<std::size_t>(n_max) + 1);
  const Real el = std::exp(lambda);
  p[0] = Real(1) - lambda;
  if (n_max >= 1) p[1] = p[0] * el - p[0];
  for (int n = 2; n <= n_max; ++n) {
    CompensatedSum<Real> s;
    Real w = lambda;  // lambda^{n-j}/(n-j)! walked up from j = n-1
    for (int j = n - 1; j >= 2; --j) {
      s.add(p[j] * w);
      w *= lambda / Real(n - j + 1);
    }
    s.add((p[0] + p[1]) * w);  // w = lambda^{n-1}/(n-1)! here
    p[n] = p[n - 1] * el - s.sum;
  }
  return p;
}

bool acceptable(const std::vector<double>& p) {
  return std::all_of(p.begin(), p.end(), [](double v) { return v >= kCancellationFloor; });
}

std::vector<double> poisson_weights(double lambda, int m) {
  std::vector<double> w(static_cast<std::size_t>(m) + 1);
  w[0] = std::exp(-lambda);
  for (int k = 1; k <= m; ++k) w[k] = w[k - 1] * lambda / k;
  return w;
}

}  // namespace

std::vector<double> burke_p_vector(double lambda_b, int n_max) {
  if (!(lambda_b > 0.0) || lambda_b >= 1.0) {
    throw DomainError("burke_p_vector: lambda must lie in (0,1), got " + std::to_string(lambda_b));
  }
  if (n_max < 2) throw DomainError("burke_p_vector: n_max must be >= 2");

  std::vector<double> p = p_vector_impl<double>(lambda_b, n_max);
  if (acceptable(p)) return p;

  const std::vector<long double> wide = p_vector_impl<long double>(lambda_b, n_max);
  p.assign(wide.begin(), wide.end());
  if (acceptable(p)) return p;

  throw PrecisionError("burke_p_vector: catastrophic cancellation at lambda=" +
                       std::to_string(lambda_b) + ", n_max=" + std::to_string(n_max));
}

BurkeQTable burke_q_table(double lambda_b, int i_max, int n_max, int m) {
  if (!(lambda_b > 0.0) || lambda_b >= 1.0) {
    throw DomainError("burke_q_table: lambda must lie in (0,1)");
  }
  if (i_max < 0 || n_max < 1 || m < 0) {
    throw DomainError("burke_q_table: bounds must satisfy i_max >= 0, n_max >= 1, m >= 0");
  }

  const std::vector<double> pw = poisson_weights(lambda_b, m);
  double tail = 1.0;
  for (double w : pw) tail -= w;
  if (tail > kPoissonTailTol) {
    throw PrecisionError("burke_q_table: Poisson tail mass " + std::to_string(tail) +
                         " above 1e-14; increase m");
  }

  BurkeQTable q;
  q.i_max = i_max;
  q.n_max = n_max;
  q.m = m;
  q.values.assign(static_cast<std::size_t>(i_max + 1) * n_max, 0.0);

  for (int n = 1; n <= n_max; ++n) {
    q.values[static_cast<std::size_t>(n) - 1] = 1.0 / n;
  }
  for (int i = 1; i <= i_max; ++i) {
    const double* prev = &q.values[static_cast<std::size_t>(i - 1) * n_max];
    double* row = &q.values[static_cast<std::size_t>(i) * n_max];
    row[0] = 0.0;  // Q_i(1,m) = delta_i
    for (int n = 2; n <= n_max; ++n) {
      // reads at n+k-1 > n_max are zero-filled truncation
      const int k_hi = std::min(m, n_max - n + 1);
      double acc = 0.0;
      for (int k = 0; k <= k_hi; ++k) {
        acc += pw[k] * prev[n + k - 2];
      }
      row[n - 1] = (1.0 - 1.0 / n) * acc;
    }
  }
  return q;
}

double BurkeState::cdf(double t) const {
  if (t < 0.0) throw DomainError("BurkeState::cdf: t must be nonnegative");
  const int ft = static_cast<int>(std::floor(t));
  if (ft > q.i_max) {
    throw DomainError("BurkeState::cdf: t=" + std::to_string(t) + " beyond table rows " +
                      std::to_string(q.i_max));
  }
  const double frac = t - ft;
  double sum = 0.0;
  for (int n = 1; n <= q.n_max && n <= static_cast<int>(p.size()); ++n) {
    double bracket = frac * q.at(ft, n);
    for (int i = 0; i < ft; ++i) bracket += q.at(i, n);
    sum += p[static_cast<std::size_t>(n) - 1] * bracket;
  }
  return (1.0 - lambda_b) + lambda_b * sum;
}

BurkeState make_burke_state(double lambda_b, int i_max, int n_max, int m) {
  BurkeState st;
  st.lambda_b = lambda_b;
  st.p = burke_p_vector(lambda_b, n_max);
  st.q = burke_q_table(lambda_b, i_max, n_max, m);
  return st;
}

double siro_cdf(double lambda_b, double t, int m, int n_max) {
  if (t < 0.0) throw DomainError("siro_cdf: t must be nonnegative");
  const int i_max = static_cast<int>(std::floor(t));
  return make_burke_state(lambda_b, i_max, n_max, m).cdf(t);
}

double StepDensity::density(double x) const {
  if (x < 0.0) throw DomainError("StepDensity::density: x must be nonnegative");
  if (cell_width <= 0.0) return 0.0;
  const auto j = static_cast<std::size_t>(x / cell_width);
  return j < cells.size() ? cells[j] : 0.0;
}

double StepDensity::mass() const {
  double sum = 0.0;
  for (double c : cells) sum += c;
  return atom_mass + cell_width * sum;
}

StepDensity siro_cell_densities(const QueueParams& p, int j_cells, int m, int n_max) {
  if (p.law != ServiceLaw::Deterministic) {
    throw DomainError("siro_cell_densities: Burke recursion applies to deterministic service");
  }
  if (j_cells < 1) throw DomainError("siro_cell_densities: need at least one cell");

  const double lambda_b = p.rho;  // Burke units: mu = 1
  const std::vector<double> pv = burke_p_vector(lambda_b, n_max);

  auto cells_for = [&](int poisson_m) {
    const BurkeQTable q = burke_q_table(lambda_b, j_cells - 1, n_max, poisson_m);
    std::vector<double> c(static_cast<std::size_t>(j_cells));
    for (int j = 1; j <= j_cells; ++j) {
      double sum = 0.0;
      for (int n = 1; n <= n_max; ++n) {
        sum += pv[static_cast<std::size_t>(n) - 1] * q.at(j - 1, n);
      }
      c[static_cast<std::size_t>(j) - 1] = p.mu * lambda_b * sum;
    }
    return c;
  };

  const std::vector<double> coarse = cells_for(m);
  const std::vector<double> fine = cells_for(m + 10);
  for (int j = 0; j < j_cells; ++j) {
    if (std::abs(coarse[j] - fine[j]) > kCellConvergenceTol) {
      throw PrecisionError("siro_cell_densities: cell " + std::to_string(j + 1) +
                           " not converged in m; increase m or n_max");
    }
  }

  StepDensity d;
  d.atom_mass = 1.0 - p.rho;
  d.cell_width = p.a;
  d.cells = fine;
  return d;
}

MomentSummary siro_moments(const QueueParams& p, const ServiceMoments& m) {
  const double r = 1.0 - p.rho;
  const double two_minus = 2.0 - p.rho;
  MomentSummary out;
  out.xi = m.xi;
  out.eta = m.eta;
  out.mean = p.lambda * m.xi / (2.0 * r);
  out.variance = 2.0 * p.lambda * m.eta / (3.0 * r * two_minus) +
                 p.lambda * p.lambda * m.xi * m.xi * (2.0 + p.rho) / (4.0 * r * r * two_minus);
  return out;
}

}  // namespace queuewait
