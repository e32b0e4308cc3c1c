#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace nodal {

// Integer point lambda = (lambda1, lambda2) on the circle |lambda|^2 = n.
using LatticePoint = std::array<std::int64_t, 2>;

// All representations of n as a sum of two squares, sorted lexicographically.
struct LatticeCircle {
  std::int64_t n = 0;
  std::vector<LatticePoint> points;

  std::int64_t r2() const { return static_cast<std::int64_t>(points.size()); }
};

// True iff n >= 1 has at least one representation as a sum of two squares.
bool is_sum_of_two_squares(std::int64_t n);

// Exhaustive scan over lambda1 in [-floor(sqrt(n)), floor(sqrt(n))].
// Throws std::invalid_argument for n < 1, std::domain_error when r2(n) = 0.
LatticeCircle enumerate_circle(std::int64_t n);

// k-th Fourier coefficient of the normalized lattice-point measure:
// (1/r2) sum_lambda ((lambda1 + i*lambda2)/sqrt(n))^k.
// Real by reflection symmetry; zero unless 4 | k.
double mu_hat(const LatticeCircle& circle, int k);

// (1/N) sum lambda1^4 and (1/N) sum lambda1^2 lambda2^2 over the circle.
struct MomentSums {
  double sum_l1_4 = 0.0;
  double sum_l1_2_l2_2 = 0.0;
};
MomentSums moment_sums(const LatticeCircle& circle);

// Classification by mu_hat(4): +1 Cilleruelo, -1 tilted Cilleruelo (1e-12
// threshold), anything else generic.
enum class SpectralClass { generic, cilleruelo, tilted_cilleruelo };
SpectralClass classify(const LatticeCircle& circle);
std::string to_string(SpectralClass c);

}  // namespace nodal
