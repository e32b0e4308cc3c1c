#include "nodal/direction_count.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>

#include "nodal/errors.hpp"

namespace nodal {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap_unit(double t) {
  t -= std::floor(t);
  if (t >= 1.0) t = 0.0;
  return t;
}

// Distance from x to the nearest copy of the line <x,k> = offset (mod 1).
double line_distance(Vec2 x, const std::array<std::int64_t, 2>& k,
                     double offset) {
  const double k1 = static_cast<double>(k[0]);
  const double k2 = static_cast<double>(k[1]);
  double r = x[0] * k1 + x[1] * k2 - offset;
  r -= std::round(r);
  return std::abs(r) / std::hypot(k1, k2);
}

}  // namespace

std::int64_t bezout_bound(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("bezout_bound: n must be >= 1");
  return 8 * n;
}

double geodesic_bound(std::int64_t n, const Direction& zeta) {
  if (!zeta.rational)
    throw std::logic_error("geodesic_bound: direction must be rational");
  return 2.0 * std::sqrt(static_cast<double>(n)) /
         static_cast<double>(zeta.height());
}

int default_grid_cells(std::int64_t n) {
  const double fine = std::ceil(24.0 * std::sqrt(static_cast<double>(n)));
  return std::max(128, static_cast<int>(fine));
}

std::vector<GeodesicLine> detect_geodesics(const ToralEigenfunction& f,
                                           const Direction& zeta,
                                           double tol_geodesic) {
  if (!zeta.rational)
    throw std::logic_error("detect_geodesics: direction must be rational");
  const std::int64_t k1 = (*zeta.rational)[0];
  const std::int64_t k2 = (*zeta.rational)[1];
  const std::array<std::int64_t, 2> v{-k2, k1};
  const double K = static_cast<double>(k1 * k1 + k2 * k2);

  // Restriction of f to the line <x,k> = phi: grouping by m = <lambda,v>,
  // a_m(phi) = sum c_lambda e(phi * <lambda,k> / K). All groups must vanish
  // simultaneously for the line to be nodal.
  struct Wave {
    double freq;  // <lambda,k> / K, cycles per unit phi
    std::complex<double> c;
  };
  std::map<std::int64_t, std::vector<Wave>> groups;
  for (const auto& t : f.terms()) {
    const std::int64_t m = t.lambda[0] * v[0] + t.lambda[1] * v[1];
    const double s = static_cast<double>(t.lambda[0] * k1 + t.lambda[1] * k2);
    groups[m].push_back({s / K, t.c});
  }

  const auto S = [&](double phi) {
    double total = 0.0;
    for (const auto& [m, waves] : groups) {
      std::complex<double> a = 0.0;
      for (const auto& w : waves) {
        const double phase = kTwoPi * w.freq * phi;
        a += w.c * std::complex<double>(std::cos(phase), std::sin(phase));
      }
      total += std::norm(a);
    }
    return total;
  };

  // Dense scan for local minima of the 1-periodic S, then ternary refinement.
  constexpr int kScan = 4096;
  std::vector<double> samples(kScan);
  for (int i = 0; i < kScan; ++i) samples[i] = S(static_cast<double>(i) / kScan);

  const double accept = tol_geodesic * tol_geodesic;
  std::vector<double> offsets;
  for (int i = 0; i < kScan; ++i) {
    const double prev = samples[(i + kScan - 1) % kScan];
    const double next = samples[(i + 1) % kScan];
    if (samples[i] > prev || samples[i] > next) continue;
    double lo = (i - 1.0) / kScan, hi = (i + 1.0) / kScan;
    for (int it = 0; it < 120; ++it) {
      const double a = lo + (hi - lo) / 3.0, b = hi - (hi - lo) / 3.0;
      if (S(a) < S(b)) hi = b;
      else lo = a;
    }
    const double phi = wrap_unit(0.5 * (lo + hi));
    if (S(phi) >= accept) continue;
    bool duplicate = false;
    for (double seen : offsets) {
      double d = phi - seen;
      d -= std::round(d);
      duplicate = duplicate || std::abs(d) < 1e-6;
    }
    if (!duplicate) offsets.push_back(phi);
  }
  std::sort(offsets.begin(), offsets.end());

  std::vector<GeodesicLine> lines;
  lines.reserve(offsets.size());
  for (double phi : offsets) lines.push_back({v, phi});
  return lines;
}

namespace {

struct NewtonResult {
  bool converged = false;
  Vec2 x{0.0, 0.0};
  double abs_f = 0.0, abs_g = 0.0, grad_norm = 0.0;
};

// Damped Newton for (f, g) = 0 with g = <grad f, xi>; Jacobian rows are
// grad f and H*xi.
NewtonResult newton_polish(const ToralEigenfunction& f,
                           const std::array<double, 2>& xi, Vec2 seed,
                           double tol_residual) {
  NewtonResult out;
  Vec2 x = seed;
  double residual = 0.0;
  for (int iter = 0; iter < 60; ++iter) {
    const JetAtPoint jet = f.evaluate_jet(x);
    const double g = jet.grad[0] * xi[0] + jet.grad[1] * xi[1];
    residual = std::max(std::abs(jet.f), std::abs(g));
    if (residual < tol_residual) {
      out.converged = true;
      out.x = torus_wrap(x);
      out.abs_f = std::abs(jet.f);
      out.abs_g = std::abs(g);
      out.grad_norm = std::hypot(jet.grad[0], jet.grad[1]);
      return out;
    }
    const double a = jet.grad[0], b = jet.grad[1];
    const double c = jet.f11 * xi[0] + jet.f12 * xi[1];
    const double d = jet.f12 * xi[0] + jet.f22 * xi[1];
    const double det = a * d - b * c;
    if (!std::isfinite(det) || std::abs(det) < 1e-300) return out;
    Vec2 step{(d * jet.f - b * g) / det, (-c * jet.f + a * g) / det};
    if (!std::isfinite(step[0]) || !std::isfinite(step[1])) return out;
    // Backtrack until the residual decreases; give up when the step stalls.
    bool moved = false;
    for (int half = 0; half < 30; ++half) {
      const Vec2 trial{x[0] - step[0], x[1] - step[1]};
      const JetAtPoint tj = f.evaluate_jet(trial);
      const double tg = tj.grad[0] * xi[0] + tj.grad[1] * xi[1];
      const double tres = std::max(std::abs(tj.f), std::abs(tg));
      if (tres < residual) {
        x = trial;
        moved = true;
        break;
      }
      step[0] *= 0.5;
      step[1] *= 0.5;
    }
    if (!moved) return out;
  }
  return out;
}

}  // namespace

DirectionalCountReport count_directional_points(const ToralEigenfunction& f,
                                                const Direction& zeta,
                                                int grid_cells,
                                                const CountTolerances& tol) {
  if (!f.monochromatic())
    throw std::invalid_argument(
        "count_directional_points: eigenfunction must be monochromatic");
  const std::int64_t n = *f.n();
  const int G = grid_cells > 0 ? grid_cells : default_grid_cells(n);
  const double root_n = std::sqrt(static_cast<double>(n));
  if (static_cast<double>(G) < 4.0 * root_n)
    throw GridTooCoarse("count_directional_points: grid_cells " +
                        std::to_string(G) + " below 4*sqrt(n)");

  DirectionalCountReport report;
  report.grid_cells = G;
  report.bezout_bound = bezout_bound(n);
  if (zeta.rational) {
    report.geodesic_bound = geodesic_bound(n, zeta);
    report.geodesics = detect_geodesics(f, zeta, tol.geodesic);
  }

  const std::array<double, 2> xi = zeta.xi_unit();
  const double singular_scale =
      tol.singular_rel * (kTwoPi / 2.0) * std::sqrt(2.0 * static_cast<double>(n));

  const auto near_geodesic = [&](Vec2 x) {
    for (const auto& line : report.geodesics) {
      // line.direction = (-k2, k1); recover k = (k1, k2).
      const std::array<std::int64_t, 2> k{line.direction[1],
                                          -line.direction[0]};
      if (line_distance(x, k, line.offset) < tol.dedupe_radius) return true;
    }
    return false;
  };

  const auto push_deduped = [&](std::vector<DirectionalPoint>& list,
                                const DirectionalPoint& p) {
    for (const auto& q : list)
      if (torus_distance(p.x, q.x) < tol.dedupe_radius) return;
    list.push_back(p);
  };

  for (const Polyline& poly : extract_nodal_polylines(f, G)) {
    const std::size_t M = poly.size();
    if (M < 2) continue;
    std::vector<double> g(M);
    for (std::size_t i = 0; i < M; ++i) {
      const JetAtPoint jet = f.evaluate_jet(poly[i]);
      g[i] = jet.grad[0] * xi[0] + jet.grad[1] * xi[1];
    }
    for (std::size_t i = 0; i < M; ++i) {
      const std::size_t j = (i + 1) % M;
      const bool si = g[i] >= 0.0, sj = g[j] >= 0.0;
      if (si == sj) continue;
      ++report.seeds;
      const Vec2 d = torus_delta(poly[i], poly[j]);
      const double t = g[i] / (g[i] - g[j]);
      const Vec2 seed{poly[i][0] + t * d[0], poly[i][1] + t * d[1]};
      const NewtonResult root = newton_polish(f, xi, seed, tol.residual);
      if (!root.converged) {
        ++report.newton_divergences;
        continue;
      }
      if (near_geodesic(root.x)) continue;
      DirectionalPoint p{root.x, root.abs_f, root.abs_g, root.grad_norm};
      if (root.grad_norm <= singular_scale) push_deduped(report.singular_suspects, p);
      else push_deduped(report.points, p);
    }
  }

  const auto by_position = [](const DirectionalPoint& a, const DirectionalPoint& b) {
    return a.x < b.x;
  };
  std::sort(report.points.begin(), report.points.end(), by_position);
  std::sort(report.singular_suspects.begin(), report.singular_suspects.end(),
            by_position);
  report.count = static_cast<int>(report.points.size());
  report.inconclusive = !report.singular_suspects.empty();
  return report;
}

}  // namespace nodal
