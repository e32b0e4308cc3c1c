#pragma once

namespace nodal {

// Bessel J_m on the desk-scale envelope 0 <= m <= 50, 0 <= x <= 500, to
// absolute accuracy ~1e-12: power series at small x, Miller's backward
// recurrence (normalized by J_0 + 2*sum J_{2k} = 1) elsewhere.
double bessel_j(int m, double x);
double bessel_j_prime(int m, double x);

// k-th positive zero j_{m,k} (k >= 1, m,k <= 50): bracket by a pi/4 scan from
// below the first zero, then bisection and Newton polish.
double bessel_zero(int m, int k);

// Dirichlet eigenfunction of the unit disk: J_m(j_{m,k} r) cos(m theta + phase).
struct DiskEigenfunction {
  int m = 0;
  int k = 1;
  double phase = 0.0;
  double j_mk = 0.0;

  double eigenvalue() const { return j_mk * j_mk; }
  double value(double r, double theta) const;
};
DiskEigenfunction make_disk_eigenfunction(int m, int k, double phase = 0.0);

// Directional count outcome for separable domains. The count is exact
// (closed form), not a numerical trace. singular_coincidence marks a zeta
// parallel to a nodal diameter, where the counted points are singular
// crossings.
struct SeparableCount {
  bool infinite = false;
  int count = 0;
  bool singular_coincidence = false;
};

// m = 0: always finite 2(k-1). m >= 1: infinite iff zeta is perpendicular to
// one of the m nodal diameters (1e-9 angle tolerance), else finite 2(k-1).
SeparableCount disk_directional_count(const DiskEigenfunction& e,
                                      double zeta_angle);

// Eigenfunction sin(sqrt(alpha) m x) sin(n y) on the irrational rectangle:
// count is 0 for every direction except the axis directions hitting interior
// grid lines, which give infinity.
struct RectangleSpec {
  double alpha = 1.0;  // aspect parameter > 0
  int m = 1;
  int n = 1;
};
SeparableCount rectangle_directional_count(const RectangleSpec& r,
                                           double zeta_angle);

// 2(k-1) <= (2/pi) j_{m,k} and 2m <= 2 j_{m,k}, for m,k <= 20.
bool disk_bound_check(int m, int k);

}  // namespace nodal
