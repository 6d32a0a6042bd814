#include "qce/line_sweep.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace qce {

std::vector<LatticeLine> enumerate_lines(const std::array<int, 3>& shape,
                                         const std::array<int, 3>& step) {
    if (step == std::array<int, 3>{0, 0, 0})
        throw std::runtime_error("enumerate_lines: zero step");
    auto inside = [&](const std::array<int, 3>& p) {
        for (int a = 0; a < 3; ++a)
            if (p[a] < 0 || p[a] >= shape[a]) return false;
        return true;
    };
    std::vector<LatticeLine> lines;
    std::array<int, 3> p{};
    for (p[0] = 0; p[0] < shape[0]; ++p[0])
        for (p[1] = 0; p[1] < shape[1]; ++p[1])
            for (p[2] = 0; p[2] < shape[2]; ++p[2]) {
                const std::array<int, 3> prev{p[0] - step[0], p[1] - step[1], p[2] - step[2]};
                if (inside(prev)) continue;  // not a line start
                LatticeLine line{p, step, 0};
                for (std::array<int, 3> q = p; inside(q);
                     q = {q[0] + step[0], q[1] + step[1], q[2] + step[2]})
                    ++line.count;
                lines.push_back(line);
            }
    return lines;
}

double arc_step(const GridFn& u, const std::array<int, 3>& step) {
    double s = 0.0;
    for (int a = 0; a < 3; ++a) s += (step[a] * u.spacing[a]) * (step[a] * u.spacing[a]);
    return std::sqrt(s);
}

namespace {

std::ptrdiff_t flat_stride(const std::array<int, 3>& shape, const std::array<int, 3>& step) {
    return (static_cast<std::ptrdiff_t>(step[0]) * shape[1] + step[1]) * shape[2] + step[2];
}

void process_line(std::vector<double>& values, const LatticeLine& line, size_t base,
                  std::ptrdiff_t stride, double h, const std::optional<RobustParams>& robust) {
    thread_local std::vector<double> buf;
    buf.resize(static_cast<size_t>(line.count));
    std::ptrdiff_t at = static_cast<std::ptrdiff_t>(base);
    for (int t = 0; t < line.count; ++t, at += stride) buf[static_cast<size_t>(t)] = values[static_cast<size_t>(at)];
    if (robust)
        robust_qce_1d_inplace(buf, robust->epsilon, h);
    else
        qce_1d_inplace(buf);
    at = static_cast<std::ptrdiff_t>(base);
    for (int t = 0; t < line.count; ++t, at += stride) values[static_cast<size_t>(at)] = buf[static_cast<size_t>(t)];
}

void apply_direction_inplace(GridFn& u, const std::vector<LatticeLine>& lines,
                             std::ptrdiff_t stride, double h,
                             const std::optional<RobustParams>& robust, Execution exec) {
    if (exec == Execution::serial) {
        // Reference path: no OpenMP involvement at all.
        for (const auto& line : lines) {
            if (line.count < 2) continue;
            process_line(u.values, line, u.flat(line.start), stride, h, robust);
        }
        return;
    }
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(lines.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto& line = lines[static_cast<size_t>(i)];
        if (line.count < 2) continue;
        process_line(u.values, line, u.flat(line.start), stride, h, robust);
    }
}

std::pair<GridFn, SolveReport> solve_impl(const GridFn& g, const DirectionSet& D,
                                          const std::optional<RobustParams>& robust,
                                          const SolveParams& params) {
    if (D.dim != g.dim) throw std::runtime_error("solve: direction set dimension mismatch");
    if (D.vectors.empty()) throw std::runtime_error("solve: empty direction set");
    if (!(params.tolerance > 0.0)) throw std::runtime_error("solve: tolerance must be > 0");
    if (params.max_outer_iterations < 1)
        throw std::runtime_error("solve: max_outer_iterations must be >= 1");
    if (robust && !(std::isfinite(robust->epsilon) && robust->epsilon >= 0.0))
        throw std::runtime_error("solve: epsilon must be finite and >= 0");

    const auto t0 = std::chrono::steady_clock::now();
    GridFn u = g;
    struct Pass {
        std::vector<LatticeLine> lines;
        std::ptrdiff_t stride;
        double h;
    };
    std::vector<Pass> passes;
    passes.reserve(D.vectors.size());
    for (const auto& v : D.vectors)
        passes.push_back({enumerate_lines(u.shape, v), flat_stride(u.shape, v), arc_step(u, v)});

    SolveReport report;
    std::vector<double> before = u.values;
    for (int iter = 1; iter <= params.max_outer_iterations; ++iter) {
        for (const auto& pass : passes)
            apply_direction_inplace(u, pass.lines, pass.stride, pass.h, robust, params.execution);
        double change = 0.0;
        for (size_t i = 0; i < u.values.size(); ++i)
            change = std::max(change, std::abs(before[i] - u.values[i]));
        report.max_change_per_iteration.push_back(change);
        report.outer_iterations = iter;
        if (params.on_iterate) params.on_iterate(u, iter);
        if (change < params.tolerance) {
            report.converged = true;
            break;
        }
        before = u.values;
    }
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {std::move(u), std::move(report)};
}

}  // namespace

GridFn apply_direction(const GridFn& u, const std::array<int, 3>& step,
                       const std::optional<RobustParams>& robust, Execution exec) {
    if (robust && !(std::isfinite(robust->epsilon) && robust->epsilon >= 0.0))
        throw std::runtime_error("apply_direction: epsilon must be finite and >= 0");
    GridFn out = u;
    apply_direction_inplace(out, enumerate_lines(out.shape, step), flat_stride(out.shape, step),
                            arc_step(out, step), robust, exec);
    return out;
}

std::pair<GridFn, SolveReport> solve(const GridFn& g, const DirectionSet& D,
                                     const SolveParams& params) {
    return solve_impl(g, D, std::nullopt, params);
}

std::pair<GridFn, SolveReport> robust_solve(const GridFn& g, const DirectionSet& D,
                                            double epsilon, const SolveParams& params) {
    return solve_impl(g, D, RobustParams{epsilon}, params);
}

}  // namespace qce
