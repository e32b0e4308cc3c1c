#include "nodal/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "nodal/errors.hpp"

namespace nodal {

namespace {

// Largest s with s*s <= v, computed without floating-point drift.
std::int64_t isqrt64(std::int64_t v) {
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (s > 0 && s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

}  // namespace

bool is_sum_of_two_squares(std::int64_t n) {
  if (n < 1) return false;
  const std::int64_t root = isqrt64(n);
  for (std::int64_t a = 0; a <= root; ++a) {
    const std::int64_t rem = n - a * a;
    const std::int64_t b = isqrt64(rem);
    if (b * b == rem) return true;
  }
  return false;
}

LatticeCircle enumerate_circle(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("enumerate_circle: n must be >= 1");
  LatticeCircle circle;
  circle.n = n;
  const std::int64_t root = isqrt64(n);
  for (std::int64_t a = -root; a <= root; ++a) {
    const std::int64_t rem = n - a * a;
    const std::int64_t b = isqrt64(rem);
    if (b * b != rem) continue;
    circle.points.push_back({a, b});
    if (b != 0) circle.points.push_back({a, -b});
  }
  if (circle.points.empty())
    throw NotSumOfTwoSquares("enumerate_circle: " + std::to_string(n) +
                             " is not a sum of two squares");
  std::sort(circle.points.begin(), circle.points.end());
  return circle;
}

namespace {

// True when N * n^ceil(k/2) stays below 2^53, i.e. the Gaussian-integer sums
// below and their denominator convert to double without rounding.
bool mu_hat_exact_ok(std::int64_t n, std::int64_t N, int k) {
  const std::int64_t cap = std::int64_t{1} << 53;
  std::int64_t acc = N;
  for (int j = 0; j < (k + 1) / 2; ++j) {
    if (acc > cap / n) return false;
    acc *= n;
  }
  return true;
}

}  // namespace

double mu_hat(const LatticeCircle& circle, int k) {
  // (lambda1 + i*lambda2)^k is a Gaussian integer of magnitude n^{k/2}, so
  // when everything fits in 53 bits the sum is computed exactly and the one
  // final division is correctly rounded. This keeps the algebraic special
  // values exact in floating point -- mu4 = 1 and -1 for the Cilleruelo
  // circles, 0 whenever 4 does not divide k -- which the degenerate-angle
  // handling downstream depends on.
  const auto N = static_cast<std::int64_t>(circle.points.size());
  if (k >= 0 && mu_hat_exact_ok(circle.n, N, k)) {
    std::int64_t sum_re = 0, sum_im = 0;
    for (const auto& p : circle.points) {
      std::int64_t re = 1, im = 0;
      for (int j = 0; j < k; ++j) {
        const std::int64_t next_re = re * p[0] - im * p[1];
        im = re * p[1] + im * p[0];
        re = next_re;
      }
      sum_re += re;
      sum_im += im;
    }
    if (sum_im != 0)  // impossible for a conjugation-symmetric point set
      throw std::logic_error("mu_hat: imaginary residue exceeds 1e-12");
    if (sum_re == 0) return 0.0;
    if (k % 2 == 0) {
      std::int64_t denom = N;
      for (int j = 0; j < k / 2; ++j) denom *= circle.n;
      return static_cast<double>(sum_re) / static_cast<double>(denom);
    }
    return static_cast<double>(sum_re) /
           (static_cast<double>(N) *
            std::pow(static_cast<double>(circle.n), 0.5 * k));
  }

  // Out-of-range fallback: straight floating-point evaluation.
  const double root_n = std::sqrt(static_cast<double>(circle.n));
  std::complex<double> sum = 0.0;
  for (const auto& p : circle.points) {
    const std::complex<double> z(static_cast<double>(p[0]) / root_n,
                                 static_cast<double>(p[1]) / root_n);
    sum += std::pow(z, k);
  }
  sum /= static_cast<double>(circle.points.size());
  if (std::abs(sum.imag()) >= 1e-12)
    throw std::logic_error("mu_hat: imaginary residue exceeds 1e-12");
  return sum.real();
}

MomentSums moment_sums(const LatticeCircle& circle) {
  MomentSums m;
  for (const auto& p : circle.points) {
    const double l1 = static_cast<double>(p[0]);
    const double l2 = static_cast<double>(p[1]);
    m.sum_l1_4 += l1 * l1 * l1 * l1;
    m.sum_l1_2_l2_2 += l1 * l1 * l2 * l2;
  }
  const double N = static_cast<double>(circle.points.size());
  m.sum_l1_4 /= N;
  m.sum_l1_2_l2_2 /= N;
  return m;
}

SpectralClass classify(const LatticeCircle& circle) {
  const double mu4 = mu_hat(circle, 4);
  if (std::abs(mu4 - 1.0) < 1e-12) return SpectralClass::cilleruelo;
  if (std::abs(mu4 + 1.0) < 1e-12) return SpectralClass::tilted_cilleruelo;
  return SpectralClass::generic;
}

std::string to_string(SpectralClass c) {
  switch (c) {
    case SpectralClass::cilleruelo: return "cilleruelo";
    case SpectralClass::tilted_cilleruelo: return "tilted_cilleruelo";
    default: return "generic";
  }
}

}  // namespace nodal
