#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "nodal/errors.hpp"
#include "nodal/separable.hpp"

using namespace nodal;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Textbook ascending series with explicit factorials, usable while the terms
// stay small. Independent of the library's evaluation strategy.
double series_oracle(int m, double x) {
  double sum = 0.0;
  for (int t = 0; t <= 60; ++t) {
    const double term = std::pow(0.5 * x, m + 2 * t) /
                        (std::tgamma(t + 1.0) * std::tgamma(m + t + 1.0));
    sum += (t % 2 == 0) ? term : -term;
  }
  return sum;
}

// J_m with the negative-order reflection J_{-m} = (-1)^m J_m.
double j_signed(int m, double x) {
  if (m >= 0) return bessel_j(m, x);
  const double v = bessel_j(-m, x);
  return (-m) % 2 == 0 ? v : -v;
}

}  // namespace

TEST_CASE("bessel_j against the factorial series") {
  for (int m : {0, 1, 2, 5, 10})
    for (double x : {0.0, 0.3, 1.0, 2.5, 4.0, 6.5, 8.0})
      CHECK(bessel_j(m, x) ==
            doctest::Approx(series_oracle(m, x)).epsilon(1e-11));
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(3, 0.0) == 0.0);
}

TEST_CASE("three-term recurrence holds across the envelope") {
  // x values straddle the series/Miller split on both sides.
  for (int m : {1, 2, 5, 10, 20, 35, 49})
    for (double x : {0.5, 3.0, 11.9, 12.1, 25.0, 80.0, 173.4, 499.0}) {
      const double resid =
          j_signed(m - 1, x) + j_signed(m + 1, x) - (2.0 * m / x) * bessel_j(m, x);
      CHECK(std::abs(resid) < 1e-10);
    }
}

TEST_CASE("Bessel ODE residual") {
  for (int m : {0, 1, 2, 7, 15, 30})
    for (double x : {0.7, 5.0, 13.0, 40.0, 120.0, 350.0}) {
      const double j = bessel_j(m, x);
      const double jp = bessel_j_prime(m, x);
      // J'' from the doubled derivative recurrence.
      const double jpp = 0.25 * (j_signed(m - 2, x) - 2.0 * j + j_signed(m + 2, x));
      const double resid = x * x * jpp + x * jp + (x * x - double(m) * m) * j;
      CHECK(std::abs(resid) < 1e-8 * (1.0 + x * x));
    }
}

TEST_CASE("derivative against central differences and at zero") {
  const double h = 1e-6;
  for (int m : {0, 1, 3, 12, 30})
    for (double x : {0.4, 2.0, 9.0, 33.0, 210.0}) {
      const double fd = (bessel_j(m, x + h) - bessel_j(m, x - h)) / (2 * h);
      CHECK(bessel_j_prime(m, x) == doctest::Approx(fd).epsilon(5e-5));
    }
  CHECK(bessel_j_prime(0, 0.0) == 0.0);
  CHECK(bessel_j_prime(1, 0.0) == 0.5);
  CHECK(bessel_j_prime(2, 0.0) == 0.0);
}

TEST_CASE("envelope enforcement") {
  CHECK_THROWS_AS(bessel_j(51, 1.0), std::domain_error);
  CHECK_THROWS_AS(bessel_j(-1, 1.0), std::domain_error);
  CHECK_THROWS_AS(bessel_j(0, 500.5), std::domain_error);
  CHECK_THROWS_AS(bessel_j(0, -0.1), std::domain_error);
  CHECK_THROWS_AS(bessel_zero(0, 0), std::domain_error);
  CHECK_THROWS_AS(bessel_zero(0, 51), std::domain_error);
  CHECK_THROWS_AS(bessel_zero(51, 1), std::domain_error);
}

TEST_CASE("bessel zeros: bisection oracle, ordering, interlacing") {
  // Independent bracket-and-bisect on the factorial series.
  double lo = 2.0, hi = 3.0;
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((series_oracle(0, lo) >= 0) == (series_oracle(0, mid) >= 0)) lo = mid;
    else hi = mid;
  }
  const double oracle01 = 0.5 * (lo + hi);
  CHECK(bessel_zero(0, 1) == doctest::Approx(oracle01).epsilon(1e-12));
  CHECK(bessel_zero(0, 1) ==
        doctest::Approx(2.404825557695773).epsilon(1e-12));

  for (int m = 0; m <= 12; ++m) {
    double prev = 0.0;
    for (int k = 1; k <= 12; ++k) {
      const double z = bessel_zero(m, k);
      CHECK(z > prev);
      CHECK(std::abs(bessel_j(m, z)) < 1e-10);
      // McCann lower bound.
      CHECK(z * z >= kPi * kPi * (k - 0.25) * (k - 0.25) + double(m) * m - 1e-9);
      // Interlacing with the next order.
      CHECK(bessel_zero(m + 1, k) > z);
      prev = z;
    }
  }
}

TEST_CASE("disk eigenfunction") {
  const DiskEigenfunction e = make_disk_eigenfunction(3, 5, 0.25);
  CHECK(e.j_mk == doctest::Approx(bessel_zero(3, 5)).epsilon(1e-15));
  CHECK(e.eigenvalue() == doctest::Approx(e.j_mk * e.j_mk).epsilon(1e-15));
  for (double t : {0.0, 0.8, 2.2})
    CHECK(std::abs(e.value(1.0, t)) < 1e-9);  // Dirichlet boundary
  CHECK(e.value(0.37, 1.1) ==
        doctest::Approx(bessel_j(3, e.j_mk * 0.37) * std::cos(3 * 1.1 + 0.25))
            .epsilon(1e-13));
}

TEST_CASE("disk directional count") {
  const DiskEigenfunction e35 = make_disk_eigenfunction(3, 5);
  const SeparableCount generic = disk_directional_count(e35, 0.3);
  CHECK_FALSE(generic.infinite);
  CHECK(generic.count == 8);
  CHECK_FALSE(generic.singular_coincidence);

  // Nodal diameters of cos(3 theta) sit at pi/6 + j pi/3; zeta orthogonal to
  // one of them yields whole diameters of directional points.
  const SeparableCount infinite = disk_directional_count(e35, kPi / 6 + kPi / 2);
  CHECK(infinite.infinite);
  CHECK(infinite.count == 0);
  CHECK_FALSE(infinite.singular_coincidence);
  // Same direction mod pi.
  CHECK(disk_directional_count(e35, kPi / 6 + kPi / 2 + kPi).infinite);
  CHECK(disk_directional_count(e35, kPi / 6 + kPi / 2 - 3 * kPi).infinite);

  const SeparableCount parallel = disk_directional_count(e35, kPi / 6);
  CHECK_FALSE(parallel.infinite);
  CHECK(parallel.singular_coincidence);
  CHECK(parallel.count == 8);

  // Radial modes have no diameters: every direction is generic.
  const DiskEigenfunction e04 = make_disk_eigenfunction(0, 4);
  for (double a : {0.0, 0.5, kPi / 2, 2.8}) {
    const SeparableCount c = disk_directional_count(e04, a);
    CHECK_FALSE(c.infinite);
    CHECK(c.count == 6);
  }
  CHECK(disk_directional_count(make_disk_eigenfunction(2, 1), 0.77).count == 0);

  // Phase shifts rotate the diameters.
  const DiskEigenfunction shifted = make_disk_eigenfunction(3, 2, 0.4);
  const double diameter = (0.5 * kPi - 0.4) / 3;
  CHECK(disk_directional_count(shifted, diameter + kPi / 2).infinite);
  CHECK(disk_directional_count(shifted, diameter).singular_coincidence);

  // For even m the diameters pair up orthogonally, so a direction along one
  // diameter is normal to another: infinite wins over the singular flag.
  const DiskEigenfunction e23 = make_disk_eigenfunction(2, 3);
  const SeparableCount along = disk_directional_count(e23, kPi / 4);
  CHECK(along.infinite);
  CHECK_FALSE(along.singular_coincidence);
}

TEST_CASE("rectangle directional count") {
  const RectangleSpec r{1.3, 3, 1};
  CHECK(rectangle_directional_count(r, 0.0).infinite);         // vertical lines
  CHECK(rectangle_directional_count(r, kPi).infinite);         // same mod pi
  CHECK_FALSE(rectangle_directional_count(r, kPi / 2).infinite);  // n = 1
  CHECK(rectangle_directional_count(r, kPi / 2).count == 0);
  CHECK_FALSE(rectangle_directional_count(r, 0.7).infinite);
  CHECK(rectangle_directional_count(r, 0.7).count == 0);

  const RectangleSpec both{0.31, 2, 4};
  CHECK(rectangle_directional_count(both, 0.0).infinite);
  CHECK(rectangle_directional_count(both, kPi / 2).infinite);
  CHECK_FALSE(rectangle_directional_count(both, 1.0).infinite);

  const RectangleSpec ground{2.0, 1, 1};
  for (double a : {0.0, kPi / 2, 0.3})
    CHECK_FALSE(rectangle_directional_count(ground, a).infinite);

  CHECK_THROWS_AS(rectangle_directional_count({0.0, 2, 2}, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(rectangle_directional_count({1.0, 0, 2}, 0.1),
                  std::invalid_argument);
}

TEST_CASE("disk bound check") {
  for (int m : {0, 1, 3, 8})
    for (int k : {1, 2, 5, 8}) CHECK(disk_bound_check(m, k));
  CHECK_THROWS_AS(disk_bound_check(21, 1), std::domain_error);
  CHECK_THROWS_AS(disk_bound_check(1, 21), std::domain_error);
}
