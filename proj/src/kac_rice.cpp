#include "nodal/kac_rice.hpp"

#include <cmath>
#include <stdexcept>

#include "nodal/lattice.hpp"

namespace nodal {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double mu4_of(std::int64_t n) { return mu_hat(enumerate_circle(n), 4); }

// 1 + mu4 cos(4 theta), clamped at 0: roundoff can push the degenerate
// Cilleruelo radicand a hair negative.
double radicand(double mu4, double theta) {
  const double r = 1.0 + mu4 * std::cos(4.0 * theta);
  return r > 0.0 ? r : 0.0;
}

}  // namespace

double density_factor_phi0(std::int64_t n) {
  enumerate_circle(n);  // rejects unattainable n
  return 1.0 / (std::pow(2.0, 1.5) * kPi * kPi *
                std::sqrt(static_cast<double>(n)));
}

double conditional_jacobian_expectation(std::int64_t n, double theta) {
  const double nn = static_cast<double>(n);
  return 2.0 * kPi * kPi * std::pow(nn, 1.5) *
         std::sqrt(radicand(mu4_of(n), theta));
}

double expected_count(std::int64_t n, double theta) {
  const double nn = static_cast<double>(n);
  return nn / std::sqrt(2.0) * std::sqrt(radicand(mu4_of(n), theta));
}

KacRiceBreakdown kac_rice_breakdown(std::int64_t n, double theta) {
  KacRiceBreakdown b;
  b.n = n;
  b.theta = theta;
  b.mu4 = mu4_of(n);
  b.phi0 = density_factor_phi0(n);
  const double rad = radicand(b.mu4, theta);
  b.degenerate = rad == 0.0;
  const double nn = static_cast<double>(n);
  b.jexp = 2.0 * kPi * kPi * std::pow(nn, 1.5) * std::sqrt(rad);
  b.density = b.phi0 * b.jexp;
  b.expectation = nn / std::sqrt(2.0) * std::sqrt(rad);
  return b;
}

Matrix5 derivative_covariance_matrix(std::int64_t n) {
  const double mu4 = mu4_of(n);
  const double nn = static_cast<double>(n);
  const double pi2 = kPi * kPi;
  const double pi4 = pi2 * pi2;
  Matrix5 m{};
  m[0][0] = m[1][1] = 2.0 * pi2 * nn;                 // f1, f2
  m[2][2] = m[4][4] = 2.0 * pi4 * nn * nn * (3.0 + mu4);  // f11, f22
  m[3][3] = 2.0 * pi4 * nn * nn * (1.0 - mu4);            // f12
  m[2][4] = m[4][2] = 2.0 * pi4 * nn * nn * (1.0 - mu4);  // f11-f22 cross
  return m;
}

OracleEstimate monte_carlo_jexp_oracle(std::int64_t n, double theta,
                                       std::int64_t samples, RngStream& rng) {
  if (samples < 10000)
    throw std::invalid_argument("monte_carlo_jexp_oracle: samples must be >= 1e4");
  const double var = radicand(mu4_of(n), theta);
  const double sigma = std::sqrt(var);
  const double prefactor =
      std::sqrt(2.0) * std::pow(kPi, 2.5) * std::pow(static_cast<double>(n), 1.5);
  double sum = 0.0, sum_sq = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const double a = std::abs(sigma * rng.next_gaussian());
    sum += a;
    sum_sq += a * a;
  }
  const double count = static_cast<double>(samples);
  const double mean = sum / count;
  const double variance = std::max(0.0, sum_sq / count - mean * mean);
  OracleEstimate est;
  est.value = prefactor * mean;
  est.std_error = prefactor * std::sqrt(variance / count);
  return est;
}

}  // namespace nodal
