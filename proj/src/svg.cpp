#include "nodal/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "nodal/contour.hpp"
#include "nodal/direction_count.hpp"

namespace nodal {

namespace {

// Canvas: unit square -> 1000x1000, y up in math coordinates, down in SVG.
double cx(double x) { return 1000.0 * x; }
double cy(double y) { return 1000.0 * (1.0 - y); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Split a closed torus polyline into plain-coordinate chains, cutting at the
// seam; seam-crossing segments are drawn on both sides.
std::vector<std::vector<Vec2>> unwrap_chains(const Polyline& poly) {
  std::vector<std::vector<Vec2>> chains;
  if (poly.empty()) return chains;
  std::vector<Vec2> chain{poly[0]};
  const std::size_t M = poly.size();
  for (std::size_t i = 0; i < M; ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % M];
    const Vec2 d = torus_delta(a, b);
    const Vec2 unwrapped{a[0] + d[0], a[1] + d[1]};
    const bool wrapped = std::abs(unwrapped[0] - b[0]) > 0.5 ||
                         std::abs(unwrapped[1] - b[1]) > 0.5;
    if (!wrapped) {
      chain.push_back(b);
    } else {
      // Draw the seam-crossing segment on both sides of the square.
      chain.push_back(unwrapped);
      chains.push_back(std::move(chain));
      chain = {{b[0] - d[0], b[1] - d[1]}, b};
    }
  }
  chains.push_back(std::move(chain));
  if (chains.size() == 1) chains[0].pop_back();  // closing vertex, drawn via Z
  return chains;
}

void write_path(std::ostream& os, const std::vector<Vec2>& pts, bool close,
                const char* style) {
  if (pts.size() < 2) return;
  os << "  <path d=\"M " << fmt(cx(pts[0][0])) << ' ' << fmt(cy(pts[0][1]));
  for (std::size_t i = 1; i < pts.size(); ++i)
    os << " L " << fmt(cx(pts[i][0])) << ' ' << fmt(cy(pts[i][1]));
  if (close) os << " Z";
  os << "\" " << style << "/>\n";
}

const char kSvgOpen[] =
    "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
    "viewBox=\"0 0 1000 1000\">\n"
    "  <rect width=\"1000\" height=\"1000\" fill=\"#ffffff\"/>\n";

}  // namespace

void emit_nodal_svg(const ToralEigenfunction& f,
                    const std::optional<Direction>& zeta,
                    const std::string& path, int grid_cells) {
  const int G = grid_cells > 0
                    ? grid_cells
                    : (f.monochromatic() ? default_grid_cells(*f.n()) : 256);
  const std::vector<Polyline> polylines = extract_nodal_polylines(f, G);

  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for write: " + path);
  os << kSvgOpen;

  for (const Polyline& poly : polylines) {
    const auto chains = unwrap_chains(poly);
    const bool closed = chains.size() == 1;
    for (const auto& chain : chains)
      write_path(os, chain, closed,
                 "fill=\"none\" stroke=\"#000000\" stroke-width=\"1.2\"");
  }

  if (zeta) {
    const DirectionalCountReport report =
        count_directional_points(f, *zeta, G);
    for (const auto& line : report.geodesics) {
      // Stored direction is v = (-k2, k1); the line is <x,k> = offset mod 1.
      const double k1 = static_cast<double>(line.direction[1]);
      const double k2 = static_cast<double>(-line.direction[0]);
      const double K = k1 * k1 + k2 * k2;
      const double corners[4] = {0.0, k1, k2, k1 + k2};
      double cmin = corners[0], cmax = corners[0];
      for (double c : corners) {
        cmin = std::min(cmin, c);
        cmax = std::max(cmax, c);
      }
      const double ux = -k2 / std::sqrt(K), uy = k1 / std::sqrt(K);
      for (double t = std::ceil(cmin - line.offset - 1e-12);
           line.offset + t <= cmax + 1e-12; t += 1.0) {
        const double c = line.offset + t;
        const double px = c * k1 / K, py = c * k2 / K;
        // Clip p + s*u to the unit square.
        double slo = -2.0, shi = 2.0;
        bool visible = true;
        const double p[2] = {px, py}, u[2] = {ux, uy};
        for (int axis = 0; axis < 2; ++axis) {
          if (std::abs(u[axis]) < 1e-15) {
            visible = visible && p[axis] >= -1e-12 && p[axis] <= 1.0 + 1e-12;
          } else {
            double a = (0.0 - p[axis]) / u[axis];
            double b = (1.0 - p[axis]) / u[axis];
            if (a > b) std::swap(a, b);
            slo = std::max(slo, a);
            shi = std::min(shi, b);
          }
        }
        if (!visible || slo >= shi) continue;
        os << "  <line x1=\"" << fmt(cx(px + slo * ux)) << "\" y1=\""
           << fmt(cy(py + slo * uy)) << "\" x2=\"" << fmt(cx(px + shi * ux))
           << "\" y2=\"" << fmt(cy(py + shi * uy))
           << "\" stroke=\"#1259c3\" stroke-width=\"2\" "
              "stroke-dasharray=\"10 7\"/>\n";
      }
    }
    for (const auto& pt : report.points)
      os << "  <circle cx=\"" << fmt(cx(pt.x[0])) << "\" cy=\""
         << fmt(cy(pt.x[1])) << "\" r=\"4\" fill=\"#cc2222\"/>\n";
    for (const auto& pt : report.singular_suspects)
      os << "  <circle cx=\"" << fmt(cx(pt.x[0])) << "\" cy=\""
         << fmt(cy(pt.x[1]))
         << "\" r=\"4\" fill=\"none\" stroke=\"#ee8800\" stroke-width=\"2\"/>\n";
  }

  os << "</svg>\n";
  if (!os) throw std::runtime_error("write failed: " + path);
}

void emit_disk_svg(const DiskEigenfunction& e, const std::string& path,
                   int grid_cells) {
  const int G = grid_cells > 0 ? grid_cells : 400;
  const double lo = -1.08, hi = 1.08;
  const double span = hi - lo;
  const auto world = [&](int idx) { return lo + span * idx / G; };
  const auto canvas_x = [&](double x) { return (x - lo) / span * 1000.0; };
  const auto canvas_y = [&](double y) { return (hi - y) / span * 1000.0; };
  const auto F = [&](double x, double y) {
    return e.value(std::hypot(x, y), std::atan2(y, x));
  };

  std::vector<double> vals(static_cast<std::size_t>(G + 1) * (G + 1));
  for (int j = 0; j <= G; ++j)
    for (int i = 0; i <= G; ++i)
      vals[static_cast<std::size_t>(j) * (G + 1) + i] = F(world(i), world(j));

  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for write: " + path);
  os << kSvgOpen;
  os << "  <circle cx=\"500\" cy=\"500\" r=\"" << fmt(1000.0 / span)
     << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";

  // Per-cell marching squares, clipped to the disk; segments are emitted
  // directly (no assembly needed for display).
  const auto at = [&](int i, int j) {
    return vals[static_cast<std::size_t>(j) * (G + 1) + i];
  };
  for (int j = 0; j < G; ++j) {
    for (int i = 0; i < G; ++i) {
      const double x0 = world(i), x1 = world(i + 1);
      const double y0 = world(j), y1 = world(j + 1);
      if (std::hypot(std::max(std::abs(x0), std::abs(x1)),
                     std::max(std::abs(y0), std::abs(y1))) > 1.0)
        continue;  // keep only cells fully inside the disk
      const double v00 = at(i, j), v10 = at(i + 1, j);
      const double v11 = at(i + 1, j + 1), v01 = at(i, j + 1);
      const bool s00 = v00 >= 0, s10 = v10 >= 0, s11 = v11 >= 0, s01 = v01 >= 0;
      const int config =
          (s00 ? 1 : 0) | (s10 ? 2 : 0) | (s11 ? 4 : 0) | (s01 ? 8 : 0);
      if (config == 0 || config == 15) continue;
      const auto lerp = [](double a, double b, double va, double vb) {
        return a + (b - a) * (va / (va - vb));
      };
      const Vec2 bottom{lerp(x0, x1, v00, v10), y0};
      const Vec2 top{lerp(x0, x1, v01, v11), y1};
      const Vec2 left{x0, lerp(y0, y1, v00, v01)};
      const Vec2 right{x1, lerp(y0, y1, v10, v11)};
      std::vector<std::array<Vec2, 2>> segs;
      switch (config) {
        case 1: case 14: segs.push_back({bottom, left}); break;
        case 2: case 13: segs.push_back({bottom, right}); break;
        case 3: case 12: segs.push_back({left, right}); break;
        case 4: case 11: segs.push_back({top, right}); break;
        case 6: case 9: segs.push_back({bottom, top}); break;
        case 7: case 8: segs.push_back({top, left}); break;
        case 5: case 10: {
          const double center = F(0.5 * (x0 + x1), 0.5 * (y0 + y1));
          if ((center >= 0.0) == (config == 5)) {
            segs.push_back({bottom, right});
            segs.push_back({top, left});
          } else {
            segs.push_back({bottom, left});
            segs.push_back({top, right});
          }
          break;
        }
        default: break;
      }
      for (const auto& seg : segs)
        os << "  <line x1=\"" << fmt(canvas_x(seg[0][0])) << "\" y1=\""
           << fmt(canvas_y(seg[0][1])) << "\" x2=\"" << fmt(canvas_x(seg[1][0]))
           << "\" y2=\"" << fmt(canvas_y(seg[1][1]))
           << "\" stroke=\"#000000\" stroke-width=\"1.2\"/>\n";
    }
  }
  os << "</svg>\n";
  if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace nodal
