#pragma once

#include <optional>
#include <string>

#include "nodal/direction.hpp"
#include "nodal/eigenfunction.hpp"
#include "nodal/separable.hpp"

namespace nodal {

// Nodal portrait on the unit square, 1000x1000 viewBox, stroke-only
// polylines. With a direction: directional points as radius-4 markers,
// detected geodesics as dashed lines, singular suspects hollow. Output is
// deterministic for fixed inputs.
void emit_nodal_svg(const ToralEigenfunction& f,
                    const std::optional<Direction>& zeta,
                    const std::string& path, int grid_cells = 0);

// Disk nodal portrait (boundary circle + nodal segments), same canvas.
void emit_disk_svg(const DiskEigenfunction& e, const std::string& path,
                   int grid_cells = 0);

}  // namespace nodal
