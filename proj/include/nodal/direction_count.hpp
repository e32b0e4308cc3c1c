#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nodal/contour.hpp"
#include "nodal/direction.hpp"
#include "nodal/eigenfunction.hpp"

namespace nodal {

struct CountTolerances {
  double residual = 1e-10;       // max(|f|, |<grad f, xi>|) after Newton
  double dedupe_radius = 1e-6;   // torus units
  double singular_rel = 1e-6;    // fraction of the RMS gradient pi*sqrt(2n)
  double geodesic = 1e-8;        // restriction coefficient magnitude
};

struct DirectionalPoint {
  Vec2 x;
  double abs_f = 0.0;
  double abs_g = 0.0;
  double grad_norm = 0.0;
};

// The closed geodesic { x : <x,(k1,k2)> == offset (mod 1) }, running along
// the primitive vector v = (-k2, k1).
struct GeodesicLine {
  std::array<std::int64_t, 2> direction;
  double offset = 0.0;
};

struct DirectionalCountReport {
  std::vector<DirectionalPoint> points;
  std::vector<GeodesicLine> geodesics;
  std::vector<DirectionalPoint> singular_suspects;
  int count = 0;
  std::int64_t bezout_bound = 0;
  std::optional<double> geodesic_bound;  // rational directions only
  bool inconclusive = false;             // singular suspects present
  int newton_divergences = 0;
  int seeds = 0;
  int grid_cells = 0;
};

// Theorem bounds: N_zeta <= 2E/pi^2 = 8n, and at most 2*sqrt(n)/h(zeta)
// closed geodesics orthogonal to a rational zeta.
std::int64_t bezout_bound(std::int64_t n);
double geodesic_bound(std::int64_t n, const Direction& zeta);

// max(128, ceil(24*sqrt(n))): ~24 grid samples per wavelength 1/sqrt(n).
int default_grid_cells(std::int64_t n);

// Closed geodesics orthogonal to a rational zeta on which f vanishes
// identically. f restricted to the line <x,k> = phi has coefficients
// a_m(phi) grouped by m = <lambda, v>; the line is nodal iff all a_m vanish.
// Found by a dense scan of S(phi) = sum_m |a_m(phi)|^2 plus local refinement.
std::vector<GeodesicLine> detect_geodesics(const ToralEigenfunction& f,
                                           const Direction& zeta,
                                           double tol_geodesic = 1e-8);

// Counts the isolated points of A_zeta(f): nodal points with normal parallel
// to +-zeta, excluding detected geodesics, flagging near-singular zeros.
// grid_cells = 0 picks the default; throws GridTooCoarse below 4*sqrt(n).
DirectionalCountReport count_directional_points(const ToralEigenfunction& f,
                                                const Direction& zeta,
                                                int grid_cells = 0,
                                                const CountTolerances& tol = {});

}  // namespace nodal
