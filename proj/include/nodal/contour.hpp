#pragma once

#include <vector>

#include "nodal/eigenfunction.hpp"

namespace nodal {

// One closed nodal polyline on the unit torus. Vertices lie in [0,1)^2;
// consecutive vertices may sit on opposite sides of the seam, so consumers
// must take shortest torus displacements.
using Polyline = std::vector<Vec2>;

// Marching squares with linear interpolation on the periodic G x G grid.
// Saddle cells (both diagonals crossing) are resolved by the sign of f at the
// cell center; grid values >= 0 count as positive. Each crossed edge is shared
// by exactly two cells, so the segments assemble into closed loops.
std::vector<Polyline> extract_nodal_polylines(const ToralEigenfunction& f,
                                              int grid_cells);

// Shortest representative of b - a on the torus, componentwise in [-1/2, 1/2).
Vec2 torus_delta(Vec2 a, Vec2 b);

// Torus distance.
double torus_distance(Vec2 a, Vec2 b);

// Reduce to [0,1)^2.
Vec2 torus_wrap(Vec2 x);

}  // namespace nodal
