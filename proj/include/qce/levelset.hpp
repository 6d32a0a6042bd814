#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qce/directions.hpp"
#include "qce/grid.hpp"
#include "qce/line_sweep.hpp"

namespace qce {

// Boolean occupancy per grid index, row-major like GridFn. 2D for geometry
// operations; any dimension for counting.
struct Mask {
    int dim = 2;
    std::array<int, 3> shape{1, 1, 1};
    std::vector<std::uint8_t> on;
    size_t count() const;
    size_t flat(int i, int j) const { return static_cast<size_t>(i) * shape[1] + j; }
};

Mask sublevel_mask(const GridFn& u, double alpha);

// Envelope-based hull of {g <= alpha}: the mask of the solve output at the
// same level. The envelope only lowers values, so the mask can only grow.
struct HullResult {
    GridFn u;
    Mask mask;
    SolveReport report;
};
HullResult hull_via_qce(const GridFn& g, double alpha, const DirectionSet& D,
                        const SolveParams& params = {});

// Planar convex hull of the occupied grid points (monotone chain, exact
// integer arithmetic), rasterized by point-in-convex-polygon tests with
// boundary points included. 2D, nonempty mask.
Mask convex_hull_oracle(const Mask& m);

struct MaskDiff {
    size_t count = 0;    // symmetric difference cells
    double fraction = 0; // count / |a union b|, 0 when both empty
};
MaskDiff mask_diff(const Mask& a, const Mask& b);

// Linear-interpolation contours; saddle cells split by the cell-average
// rule; segments chained into maximal polylines. Points are (x0, x1) domain
// coordinates. 2D only.
struct LevelContours {
    double level = 0.0;
    std::vector<std::vector<std::array<double, 2>>> polylines;
};
using ContourSet = std::vector<LevelContours>;
ContourSet marching_squares(const GridFn& u, std::span<const double> levels);

}  // namespace qce
