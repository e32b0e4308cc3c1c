#pragma once

#include <array>
#include <cstdint>

#include "nodal/rng.hpp"

namespace nodal {

// Constituents of the expected directional count E[N_zeta] for the
// arithmetic random wave on the circle of radius sqrt(n):
//   expectation = phi0 * jexp = (n/sqrt(2)) * sqrt(1 + mu4 * cos(4*theta)).
struct KacRiceBreakdown {
  std::int64_t n = 0;
  double theta = 0.0;
  double mu4 = 0.0;        // mu_hat_n(4)
  double phi0 = 0.0;       // density of (f, <grad f, xi>) at (0,0)
  double jexp = 0.0;       // 2 pi^2 n^{3/2} sqrt(1 + mu4 cos 4 theta)
  double density = 0.0;    // zero-density K1 = phi0 * jexp (constant in x)
  double expectation = 0.0;
  bool degenerate = false;  // radicand vanished (Cilleruelo critical angle)
};

double expected_count(std::int64_t n, double theta);
KacRiceBreakdown kac_rice_breakdown(std::int64_t n, double theta);

// 1 / (2^{3/2} pi^2 sqrt(n)): the Gaussian density of (f(x), g(x)) at the
// origin, with covariance diag(1, 2 pi^2 n).
double density_factor_phi0(std::int64_t n);

// 2 pi^2 n^{3/2} sqrt(1 + mu4 cos(4 theta)).
double conditional_jacobian_expectation(std::int64_t n, double theta);

// Covariance of (f1, f2, f11, f12, f22): diag(2 pi^2 n, 2 pi^2 n) plus the
// 3x3 second-derivative block determined by mu4. Indices 0..4 in that order.
using Matrix5 = std::array<std::array<double, 5>, 5>;
Matrix5 derivative_covariance_matrix(std::int64_t n);

// Sampling check of the conditional Jacobian expectation: draws
// A ~ N(0, 1 + mu4 cos 4theta) and returns 2^{1/2} pi^{5/2} n^{3/2} * mean|A|.
struct OracleEstimate {
  double value = 0.0;
  double std_error = 0.0;
};
OracleEstimate monte_carlo_jexp_oracle(std::int64_t n, double theta,
                                       std::int64_t samples, RngStream& rng);

}  // namespace nodal
