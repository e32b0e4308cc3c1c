#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "nodal/contour.hpp"
#include "nodal/direction_count.hpp"
#include "nodal/errors.hpp"
#include "nodal/lattice.hpp"

using namespace nodal;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Max |f| along the closed geodesic <x,k> = offset, sampled densely.
double max_on_line(const ToralEigenfunction& f, const GeodesicLine& line) {
  const std::array<std::int64_t, 2> k{line.direction[1], -line.direction[0]};
  const double K = double(k[0] * k[0] + k[1] * k[1]);
  const Vec2 base{line.offset * double(k[0]) / K, line.offset * double(k[1]) / K};
  double worst = 0.0;
  const int M = 997;
  for (int i = 0; i < M; ++i) {
    const double t = double(i) / M;
    const Vec2 x{base[0] + t * double(line.direction[0]),
                 base[1] + t * double(line.direction[1])};
    worst = std::max(worst, std::abs(f.value(x)));
  }
  return worst;
}

// Independent re-check of a reported directional point.
void check_point(const ToralEigenfunction& f, const Direction& zeta,
                 const DirectionalPoint& p) {
  const JetAtPoint jet = f.evaluate_jet(p.x);
  const auto xi = zeta.xi_unit();
  CHECK(std::abs(jet.f) < 1e-9);
  CHECK(std::abs(jet.grad[0] * xi[0] + jet.grad[1] * xi[1]) < 1e-9);
  CHECK(std::hypot(jet.grad[0], jet.grad[1]) > 1e-5);
  CHECK(p.x[0] >= 0.0);
  CHECK(p.x[0] < 1.0);
  CHECK(p.x[1] >= 0.0);
  CHECK(p.x[1] < 1.0);
}

}  // namespace

TEST_CASE("direction canonicalization") {
  const Direction a = Direction::from_integers(2, 2);
  CHECK(a.rational == std::array<std::int64_t, 2>{1, 1});
  CHECK(a.theta == doctest::Approx(kPi / 4).epsilon(1e-15));
  CHECK(a.height() == 1);

  const Direction b = Direction::from_integers(-3, 3);  // ~ (1,-1)
  CHECK(b.rational == std::array<std::int64_t, 2>{1, -1});
  CHECK(b.theta == doctest::Approx(3 * kPi / 4).epsilon(1e-15));

  const Direction c = Direction::from_integers(0, -4);
  CHECK(c.rational == std::array<std::int64_t, 2>{0, 1});
  CHECK(c.theta == doctest::Approx(kPi / 2).epsilon(1e-15));

  const Direction d = Direction::from_integers(-6, -4);
  CHECK(d.rational == std::array<std::int64_t, 2>{3, 2});
  CHECK(d.height() == 3);

  CHECK(Direction::from_angle(0.7).theta == doctest::Approx(0.7));
  CHECK(Direction::from_angle(0.7 + kPi).theta ==
        doctest::Approx(0.7).epsilon(1e-12));
  CHECK(Direction::from_angle(-0.5).theta ==
        doctest::Approx(kPi - 0.5).epsilon(1e-12));
  CHECK(Direction::from_angle(kPi).theta == doctest::Approx(0.0));

  CHECK_THROWS_AS(Direction::from_integers(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Direction::from_angle(0.3).height(), std::logic_error);

  const auto z = Direction::from_integers(3, -4).zeta_unit();
  CHECK(z[0] == doctest::Approx(0.6));
  CHECK(z[1] == doctest::Approx(-0.8));
  const auto xi = Direction::from_integers(3, -4).xi_unit();
  CHECK(xi[0] == doctest::Approx(0.8));
  CHECK(xi[1] == doctest::Approx(0.6));
}

TEST_CASE("torus metric helpers") {
  CHECK(torus_wrap({1.25, -0.25})[0] == doctest::Approx(0.25));
  CHECK(torus_wrap({1.25, -0.25})[1] == doctest::Approx(0.75));
  const Vec2 d = torus_delta({0.9, 0.1}, {0.1, 0.9});
  CHECK(d[0] == doctest::Approx(0.2));   // wraps forward
  CHECK(d[1] == doctest::Approx(-0.2));  // wraps backward
  CHECK(torus_distance({0.95, 0.5}, {0.05, 0.5}) == doctest::Approx(0.1));
  CHECK(torus_distance({0.25, 0.25}, {0.25, 0.25}) == 0.0);
}

TEST_CASE("bounds and grid defaults") {
  CHECK(bezout_bound(5) == 40);
  CHECK(bezout_bound(65) == 520);
  CHECK_THROWS_AS(bezout_bound(0), std::invalid_argument);
  CHECK(geodesic_bound(65, Direction::from_integers(1, 0)) ==
        doctest::Approx(2 * std::sqrt(65.0)));
  CHECK(geodesic_bound(65, Direction::from_integers(4, -7)) ==
        doctest::Approx(2 * std::sqrt(65.0) / 7));
  CHECK_THROWS_AS(geodesic_bound(65, Direction::from_angle(0.3)),
                  std::logic_error);
  CHECK(default_grid_cells(5) == 128);
  CHECK(default_grid_cells(25) == 128);
  CHECK(default_grid_cells(65) == 194);
  CHECK(default_grid_cells(100) == 240);
}

TEST_CASE("marching squares: vertices sit on the nodal set") {
  // 192 is divisible by 4 and 6, so every nodal line of grid(2,3) passes
  // through grid vertices and the crossings are exact.
  const ToralEigenfunction g = fixture("grid(2,3)");
  const auto polys = extract_nodal_polylines(g, 192);
  REQUIRE(!polys.empty());
  for (const auto& poly : polys) {
    REQUIRE(poly.size() >= 2);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      CHECK(std::abs(g.value(poly[i])) < 1e-9);
      // Consecutive vertices (cyclically) stay within one cell.
      const Vec2 next = poly[(i + 1) % poly.size()];
      CHECK(torus_distance(poly[i], next) <= 1.5 / 192);
    }
  }

  // Generic fixture: vertices are zero up to the linear-interpolation error.
  const ToralEigenfunction f3 = fixture("fig3");
  const auto curves = extract_nodal_polylines(f3, 240);
  CHECK(curves.size() == 20);
  for (const auto& poly : curves)
    for (const auto& v : poly) CHECK(std::abs(f3.value(v)) < 0.05);
}

TEST_CASE("marching squares: refinement keeps the curve count") {
  CHECK(extract_nodal_polylines(fixture("fig3"), 480).size() == 20);
}

TEST_CASE("geodesic detection on the product fixtures") {
  const ToralEigenfunction f2 = fixture("fig2");

  const auto vertical = detect_geodesics(f2, Direction::from_integers(1, 0));
  REQUIRE(vertical.size() == 2);
  CHECK(vertical[0].offset == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(vertical[1].offset == doctest::Approx(0.5).epsilon(1e-9));
  for (const auto& line : vertical) {
    CHECK(line.direction == std::array<std::int64_t, 2>{0, 1});
    CHECK(max_on_line(f2, line) < 1e-7);
  }

  const auto horizontal = detect_geodesics(f2, Direction::from_integers(0, 1));
  REQUIRE(horizontal.size() == 2);
  for (const auto& line : horizontal) CHECK(max_on_line(f2, line) < 1e-7);

  const auto diag = detect_geodesics(f2, Direction::from_integers(1, 1));
  REQUIRE(diag.size() == 1);
  CHECK(max_on_line(f2, diag[0]) < 1e-7);
  const auto anti = detect_geodesics(f2, Direction::from_integers(1, -1));
  REQUIRE(anti.size() == 1);
  CHECK(max_on_line(f2, anti[0]) < 1e-7);

  // fig1 has no nodal geodesics in the coordinate directions: one restriction
  // coefficient has constant modulus.
  CHECK(detect_geodesics(fixture("fig1"), Direction::from_integers(1, 0)).empty());
  CHECK(detect_geodesics(fixture("fig1"), Direction::from_integers(0, 1)).empty());

  CHECK_THROWS_AS(detect_geodesics(f2, Direction::from_angle(0.5)),
                  std::logic_error);
}

TEST_CASE("geodesic detection respects the height bound") {
  const ToralEigenfunction g = fixture("grid(3,4)");  // n = 25
  const auto vert = detect_geodesics(g, Direction::from_integers(1, 0));
  CHECK(vert.size() == 6);  // x = j/6
  for (const auto& line : vert) CHECK(max_on_line(g, line) < 1e-7);
  const auto horiz = detect_geodesics(g, Direction::from_integers(0, 1));
  CHECK(horiz.size() == 8);  // y = j/8
  CHECK(double(vert.size()) <=
        geodesic_bound(25, Direction::from_integers(1, 0)));
  CHECK(double(horiz.size()) <=
        geodesic_bound(25, Direction::from_integers(0, 1)));
}

TEST_CASE("directional count on cosline(2): sixteen analytic points") {
  const ToralEigenfunction f = fixture("cosline(2)");  // 2cos(4pix)+cos(4piy)
  const Direction zeta = Direction::from_integers(1, 0);
  const DirectionalCountReport report = count_directional_points(f, zeta);
  CHECK(report.count == 16);
  CHECK(report.geodesics.empty());
  CHECK_FALSE(report.inconclusive);
  CHECK(report.count <= report.bezout_bound);

  // Roots in closed form: sin(4 pi y) = 0 and 2cos(4 pi x) = -cos(4 pi y).
  std::vector<Vec2> expected;
  for (int jy = 0; jy < 4; ++jy) {
    const double y = jy / 4.0;
    const double c = (jy % 2 == 0) ? -0.5 : 0.5;  // target cos(4 pi x)
    const double x0 = std::acos(c) / (4 * kPi);
    for (double x : {x0, 0.5 - x0, 0.5 + x0, 1.0 - x0}) expected.push_back({x, y});
  }
  REQUIRE(expected.size() == 16);
  for (const auto& e : expected) {
    bool hit = false;
    for (const auto& p : report.points)
      hit = hit || torus_distance(p.x, e) < 1e-9;
    CHECK(hit);
  }
  for (const auto& p : report.points) check_point(f, zeta, p);
}

TEST_CASE("directional count on fig3 matches the caption") {
  const ToralEigenfunction f = fixture("fig3");
  const DirectionalCountReport horizontal =
      count_directional_points(f, Direction::from_integers(1, 0));
  CHECK(horizontal.count == 400);
  CHECK(horizontal.geodesics.empty());
  CHECK_FALSE(horizontal.inconclusive);

  const DirectionalCountReport vertical =
      count_directional_points(f, Direction::from_integers(0, 1));
  CHECK(vertical.count == 0);
  CHECK(vertical.geodesics.empty());
  CHECK_FALSE(vertical.inconclusive);
}

TEST_CASE("grid fixtures: everything is geodesic, nothing is counted") {
  const ToralEigenfunction g11 = fixture("grid(1,1)");
  const DirectionalCountReport r =
      count_directional_points(g11, Direction::from_integers(1, 0));
  REQUIRE(r.geodesics.size() == 2);
  CHECK(r.geodesics[0].offset == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(r.geodesics[1].offset == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r.count == 0);
  CHECK_FALSE(r.inconclusive);
  CHECK(*r.geodesic_bound == doctest::Approx(2 * std::sqrt(2.0)));

  const ToralEigenfunction g34 = fixture("grid(3,4)");
  const DirectionalCountReport r34 =
      count_directional_points(g34, Direction::from_integers(1, 0));
  CHECK(r34.geodesics.size() == 6);
  CHECK(r34.count == 0);
  CHECK_FALSE(r34.inconclusive);
}

TEST_CASE("random waves: parity, bounds, dedupe, residuals") {
  const LatticeCircle circle = enumerate_circle(5);
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    RngStream rng = RngStream::derive(2024, seed);
    const ToralEigenfunction f = sample_arithmetic_wave(circle, rng);
    const double theta = rng.next_double() * kPi;  // irrational direction
    const Direction zeta = Direction::from_angle(theta);
    const DirectionalCountReport report = count_directional_points(f, zeta);
    CHECK(report.geodesics.empty());
    CHECK_FALSE(report.geodesic_bound.has_value());
    CHECK(report.count <= report.bezout_bound);
    if (!report.inconclusive) {
      CHECK(report.count % 2 == 0);
      ++checked;
    }
    for (const auto& p : report.points) check_point(f, zeta, p);
    for (std::size_t i = 0; i < report.points.size(); ++i)
      for (std::size_t j = i + 1; j < report.points.size(); ++j)
        CHECK(torus_distance(report.points[i].x, report.points[j].x) >= 1e-6);
  }
  CHECK(checked >= 10);  // singular suspects should be rare
}

TEST_CASE("count is stable under grid refinement and direction aliases") {
  RngStream rng = RngStream::derive(17, 5);
  const ToralEigenfunction f =
      sample_arithmetic_wave(enumerate_circle(5), rng);
  const Direction zeta = Direction::from_angle(0.7);
  const int base = count_directional_points(f, zeta, 128).count;
  CHECK(count_directional_points(f, zeta, 256).count == base);
  CHECK(count_directional_points(f, zeta, 512).count == base);

  // (2,2) and (-1,-1) are the same direction.
  const DirectionalCountReport a =
      count_directional_points(f, Direction::from_integers(2, 2));
  const DirectionalCountReport b =
      count_directional_points(f, Direction::from_integers(-1, -1));
  CHECK(a.count == b.count);
  CHECK(a.geodesics.size() == b.geodesics.size());
}

TEST_CASE("input validation") {
  using Term = ToralEigenfunction::Term;
  const ToralEigenfunction mixed({Term{{1, 0}, {0.5, 0.0}},
                                  Term{{-1, 0}, {0.5, 0.0}},
                                  Term{{2, 0}, {0.5, 0.0}},
                                  Term{{-2, 0}, {0.5, 0.0}}});
  CHECK_THROWS_AS(
      count_directional_points(mixed, Direction::from_integers(1, 0)),
      std::invalid_argument);

  RngStream rng = RngStream::derive(1, 0);
  const ToralEigenfunction f =
      sample_arithmetic_wave(enumerate_circle(65), rng);
  CHECK_THROWS_AS(count_directional_points(f, Direction::from_angle(0.1), 30),
                  GridTooCoarse);
}
