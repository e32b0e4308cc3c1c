#include "nodal/contour.hpp"

#include <cmath>
#include <stdexcept>

namespace nodal {

Vec2 torus_wrap(Vec2 x) {
  for (double& c : x) {
    c -= std::floor(c);
    if (c >= 1.0) c = 0.0;  // floor rounding at the seam
  }
  return x;
}

Vec2 torus_delta(Vec2 a, Vec2 b) {
  Vec2 d{b[0] - a[0], b[1] - a[1]};
  for (double& c : d) c -= std::round(c);
  return d;
}

double torus_distance(Vec2 a, Vec2 b) {
  const Vec2 d = torus_delta(a, b);
  return std::hypot(d[0], d[1]);
}

namespace {

// Edge (i,j,orient): orient 0 joins (i,j)-(i+1,j), orient 1 joins (i,j)-(i,j+1),
// indices mod G.
inline int edge_id(int i, int j, int orient, int G) {
  return (j * G + i) * 2 + orient;
}

}  // namespace

std::vector<Polyline> extract_nodal_polylines(const ToralEigenfunction& f,
                                              int grid_cells) {
  const int G = grid_cells;
  if (G < 3) throw std::invalid_argument("extract_nodal_polylines: grid too small");
  const std::vector<double> vals = f.sample_grid(G);
  const auto value_at = [&](int i, int j) {
    return vals[static_cast<std::size_t>(j) * G + i];
  };
  const auto positive = [&](int i, int j) { return value_at(i, j) >= 0.0; };

  const std::size_t num_edges = static_cast<std::size_t>(G) * G * 2;
  std::vector<std::array<int, 2>> adj(num_edges, {-1, -1});
  const auto link = [&](int a, int b) {
    auto push = [&](int e, int other) {
      if (adj[e][0] == -1) adj[e][0] = other;
      else if (adj[e][1] == -1) adj[e][1] = other;
      else throw std::logic_error("marching squares: edge degree exceeds 2");
    };
    push(a, b);
    push(b, a);
  };

  for (int j = 0; j < G; ++j) {
    const int j1 = (j + 1) % G;
    for (int i = 0; i < G; ++i) {
      const int i1 = (i + 1) % G;
      const bool s00 = positive(i, j), s10 = positive(i1, j);
      const bool s11 = positive(i1, j1), s01 = positive(i, j1);
      const int config = (s00 ? 1 : 0) | (s10 ? 2 : 0) | (s11 ? 4 : 0) | (s01 ? 8 : 0);
      if (config == 0 || config == 15) continue;
      const int B = edge_id(i, j, 0, G), T = edge_id(i, j1, 0, G);
      const int L = edge_id(i, j, 1, G), R = edge_id(i1, j, 1, G);
      switch (config) {
        case 1: case 14: link(B, L); break;
        case 2: case 13: link(B, R); break;
        case 3: case 12: link(L, R); break;
        case 4: case 11: link(T, R); break;
        case 6: case 9: link(B, T); break;
        case 7: case 8: link(T, L); break;
        case 5: case 10: {
          // Saddle: connect so the nodal branches wrap the corners whose sign
          // disagrees with the cell center.
          const double center = f.value({(i + 0.5) / G, (j + 0.5) / G});
          const bool plus_diagonal_00_11 = (config == 5);
          if ((center >= 0.0) == plus_diagonal_00_11) {
            link(B, R);
            link(T, L);
          } else {
            link(B, L);
            link(T, R);
          }
          break;
        }
        default: break;
      }
    }
  }

  // Crossing position on a crossed edge, by linear interpolation.
  const auto crossing = [&](int e) -> Vec2 {
    const int orient = e & 1;
    const int cell = e >> 1;
    const int i = cell % G, j = cell / G;
    const double va = value_at(i, j);
    double vb, t;
    if (orient == 0) {
      vb = value_at((i + 1) % G, j);
      t = va / (va - vb);
      return torus_wrap({(i + t) / G, static_cast<double>(j) / G});
    }
    vb = value_at(i, (j + 1) % G);
    t = va / (va - vb);
    return torus_wrap({static_cast<double>(i) / G, (j + t) / G});
  };

  std::vector<Polyline> polylines;
  std::vector<char> visited(num_edges, 0);
  for (std::size_t start = 0; start < num_edges; ++start) {
    if (visited[start] || adj[start][0] == -1) continue;
    if (adj[start][1] == -1)
      throw std::logic_error("marching squares: open chain");
    Polyline poly;
    int prev = -1;
    int cur = static_cast<int>(start);
    do {
      visited[cur] = 1;
      poly.push_back(crossing(cur));
      const int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    } while (cur != static_cast<int>(start));
    polylines.push_back(std::move(poly));
  }
  return polylines;
}

}  // namespace nodal
