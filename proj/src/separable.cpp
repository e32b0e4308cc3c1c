#include "nodal/separable.hpp"

#include <cmath>
#include <stdexcept>

#include "nodal/errors.hpp"

namespace nodal {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void check_envelope(int m, double x) {
  if (m < 0 || m > 50)
    throw std::domain_error("bessel_j: order outside [0, 50]");
  if (!(x >= 0.0) || x > 500.0)
    throw std::domain_error("bessel_j: argument outside [0, 500]");
}

// Ascending series around 0. Safe while the terms stay O(1), i.e. for
// x <= ~2*sqrt(m+1); beyond that cancellation eats the low digits.
double series_j(int m, double x) {
  if (x == 0.0) return m == 0 ? 1.0 : 0.0;
  const double half = 0.5 * x;
  double term = std::exp(m * std::log(half) - std::lgamma(m + 1.0));
  double sum = term;
  const double q = half * half;
  for (int t = 1; t <= 400; ++t) {
    term *= -q / (static_cast<double>(t) * (m + t));
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(std::abs(sum), 1e-300)) break;
  }
  return sum;
}

// Miller's backward recurrence with Neumann-sum normalization.
double miller_j(int m, double x) {
  int start = static_cast<int>(std::max(static_cast<double>(m), x) + 30.0 +
                               10.0 * std::cbrt(x));
  if (start % 2) ++start;
  double jp1 = 0.0;
  double j = 1e-300;
  double norm = 0.0;
  double target = 0.0;
  bool captured = false;
  for (int nu = start; nu >= 1; --nu) {
    const double jm1 = (2.0 * nu / x) * j - jp1;
    jp1 = j;
    j = jm1;
    if (std::abs(j) > 1e250) {
      j *= 1e-250;
      jp1 *= 1e-250;
      norm *= 1e-250;
      if (captured) target *= 1e-250;
    }
    const int order = nu - 1;
    if (order == m) {
      target = j;
      captured = true;
    }
    if (order > 0 && order % 2 == 0) norm += 2.0 * j;
  }
  norm += j;  // J_0
  return target / norm;
}

}  // namespace

namespace {

double j_impl(int m, double x) {
  if (x == 0.0) return m == 0 ? 1.0 : 0.0;
  const double split = std::max(12.0, 2.0 * std::sqrt(m + 1.0));
  return x <= split ? series_j(m, x) : miller_j(m, x);
}

}  // namespace

double bessel_j(int m, double x) {
  check_envelope(m, x);
  return j_impl(m, x);
}

// J_m' = (J_{m-1} - J_{m+1})/2, with J_{-1} = -J_1. The m+1 evaluation is
// allowed one order past the public envelope.
double bessel_j_prime(int m, double x) {
  check_envelope(m, x);
  if (x == 0.0) return m == 1 ? 0.5 : 0.0;
  const double upper = j_impl(m + 1, x);
  const double lower = m == 0 ? -j_impl(1, x) : j_impl(m - 1, x);
  return 0.5 * (lower - upper);
}

double bessel_zero(int m, int k) {
  if (m < 0 || m > 50 || k < 1 || k > 50)
    throw std::domain_error("bessel_zero: indices outside m,k in [0,50]x[1,50]");
  // McCann's lower bound for the FIRST zero; all zeros sit above it, so a
  // pi/4 scan counting sign changes indexes them reliably (gaps exceed 2.9).
  const double start =
      std::sqrt(9.0 * kPi * kPi / 16.0 + static_cast<double>(m) * m);
  const double step = kPi / 4.0;
  double a = start;
  double fa = bessel_j(m, a);
  int found = 0;
  double lo = 0.0, hi = 0.0;
  while (true) {
    const double b = a + step;
    if (b > 500.0)
      throw ConvergenceFailure("bessel_zero: bracket not found within envelope");
    const double fb = bessel_j(m, b);
    if ((fa >= 0.0) != (fb >= 0.0)) {
      ++found;
      if (found == k) {
        lo = a;
        hi = b;
        break;
      }
    }
    a = b;
    fa = fb;
  }
  double flo = bessel_j(m, lo);
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = bessel_j(m, mid);
    if ((flo >= 0.0) == (fmid >= 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  double z = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    const double fz = bessel_j(m, z);
    const double dz = bessel_j_prime(m, z);
    if (dz == 0.0) break;
    const double next = z - fz / dz;
    if (next <= lo - 1.0 || next >= hi + 1.0) break;
    z = next;
  }
  const double mccann = kPi * kPi * (k - 0.25) * (k - 0.25) +
                        static_cast<double>(m) * m;
  if (z * z < mccann - 1e-9)
    throw std::logic_error("bessel_zero: McCann bound violated");
  return z;
}

double DiskEigenfunction::value(double r, double theta) const {
  return bessel_j(m, j_mk * r) * std::cos(m * theta + phase);
}

DiskEigenfunction make_disk_eigenfunction(int m, int k, double phase) {
  DiskEigenfunction e;
  e.m = m;
  e.k = k;
  e.phase = phase;
  e.j_mk = bessel_zero(m, k);
  return e;
}

namespace {

// |a - b| as line directions (mod pi), in [0, pi/2].
double angle_distance_mod_pi(double a, double b) {
  double d = std::fmod(a - b, kPi);
  if (d < -0.5 * kPi) d += kPi;
  if (d >= 0.5 * kPi) d -= kPi;
  return std::abs(d);
}

constexpr double kAngleTol = 1e-9;

}  // namespace

SeparableCount disk_directional_count(const DiskEigenfunction& e,
                                      double zeta_angle) {
  SeparableCount out;
  out.count = 2 * (e.k - 1);
  if (e.m == 0) return out;
  // Nodal diameters: cos(m theta + phase) = 0, i.e. m lines at angles
  // (pi/2 - phase + j*pi)/m.
  for (int j = 0; j < e.m; ++j) {
    const double diameter = (0.5 * kPi - e.phase + j * kPi) / e.m;
    if (angle_distance_mod_pi(zeta_angle, diameter + 0.5 * kPi) < kAngleTol)
      out.infinite = true;
    else if (angle_distance_mod_pi(zeta_angle, diameter) < kAngleTol)
      out.singular_coincidence = true;
  }
  if (out.infinite) {
    out.count = 0;
    out.singular_coincidence = false;
  }
  return out;
}

SeparableCount rectangle_directional_count(const RectangleSpec& r,
                                           double zeta_angle) {
  if (!(r.alpha > 0.0))
    throw std::invalid_argument("rectangle: alpha must be > 0");
  if (r.m < 1 || r.n < 1)
    throw std::invalid_argument("rectangle: mode indices must be >= 1");
  SeparableCount out;
  // Interior nodal lines are vertical (normal (1,0), present when m >= 2)
  // and horizontal (normal (0,1), present when n >= 2).
  if (r.m >= 2 && angle_distance_mod_pi(zeta_angle, 0.0) < kAngleTol)
    out.infinite = true;
  if (r.n >= 2 && angle_distance_mod_pi(zeta_angle, 0.5 * kPi) < kAngleTol)
    out.infinite = true;
  return out;
}

bool disk_bound_check(int m, int k) {
  if (m < 0 || m > 20 || k < 1 || k > 20)
    throw std::domain_error("disk_bound_check: indices outside [0,20]");
  const double j = bessel_zero(m, k);
  return 2.0 * (k - 1) <= (2.0 / kPi) * j && 2.0 * m <= 2.0 * j;
}

}  // namespace nodal
