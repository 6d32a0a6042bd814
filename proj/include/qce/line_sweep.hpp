#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qce/directions.hpp"
#include "qce/envelope1d.hpp"
#include "qce/grid.hpp"

namespace qce {

// A maximal arithmetic progression of in-bounds grid indices.
struct LatticeLine {
    std::array<int, 3> start{0, 0, 0};
    std::array<int, 3> step{0, 0, 0};
    int count = 1;
};

enum class Execution { serial, parallel };

struct SolveParams {
    double tolerance = 1e-6;       // max-norm change defining convergence
    int max_outer_iterations = 50;
    Execution execution = Execution::parallel;
    // Observer called after every outer iteration with the current iterate.
    std::function<void(const GridFn&, int iteration)> on_iterate;
};

struct SolveReport {
    int outer_iterations = 0;
    std::vector<double> max_change_per_iteration;
    bool converged = false;  // last recorded change < tolerance
    double wall_time = 0.0;  // seconds
};

// Partition of all grid indices into maximal lines with the given step:
// every index lies on exactly one line, points ordered by increasing t.
// Steps too large for two collinear points yield singleton lines.
std::vector<LatticeLine> enumerate_lines(const std::array<int, 3>& shape,
                                         const std::array<int, 3>& step);

// Euclidean length of one lattice step in domain coordinates.
double arc_step(const GridFn& u, const std::array<int, 3>& step);

// One directional pass: the 1D envelope (plain, or robust with the line's
// arc step) applied along every lattice line. Lines are independent, so the
// parallel schedule cannot change the result.
GridFn apply_direction(const GridFn& u, const std::array<int, 3>& step,
                       const std::optional<RobustParams>& robust = {},
                       Execution exec = Execution::parallel);

// Gauss-Seidel composition: each outer iteration applies every direction of
// D in order, each pass seeing the previous pass's output; stops when the
// max pointwise change over one outer iteration drops below tolerance.
std::pair<GridFn, SolveReport> solve(const GridFn& g, const DirectionSet& D,
                                     const SolveParams& params = {});
std::pair<GridFn, SolveReport> robust_solve(const GridFn& g, const DirectionSet& D,
                                            double epsilon, const SolveParams& params = {});

}  // namespace qce
