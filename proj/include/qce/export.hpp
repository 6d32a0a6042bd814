#pragma once

#include <string>

#include "qce/grid.hpp"
#include "qce/levelset.hpp"

namespace qce {

// ASCII PBM (P1): rows follow axis 0, columns axis 1; occupied cells are 1.
void write_pbm(const Mask& m, const std::string& path);

// SVG 1.1, one <g> per level; solid paths for the first set, dashed for the
// optional overlay. The domain box of u fixes the viewport mapping.
void write_svg_contours(const std::string& path, const GridFn& u, const ContourSet& solid,
                        const ContourSet* dashed = nullptr);

// Legacy ASCII VTK STRUCTURED_POINTS; the fastest-varying VTK axis is the
// grid's last axis, so values stream in natural row-major order.
void write_vtk(const GridFn& u, const std::string& path);

}  // namespace qce
