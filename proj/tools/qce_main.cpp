// Command-line surface: generate sample grids, compute (robust) quasiconvex
// envelopes, measure violations, compute level-set hulls, render contours.
//
// Exit codes: 0 success, 1 usage error, 2 solver did not converge (outputs
// are still written), 3 input validation failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "qce/directions.hpp"
#include "qce/envelope1d.hpp"
#include "qce/export.hpp"
#include "qce/grid.hpp"
#include "qce/levelset.hpp"
#include "qce/line_sweep.hpp"
#include "qce/oracles.hpp"
#include "qce/testfns.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kToolVersion = "1.0.0";
constexpr int kExitOk = 0, kExitUsage = 1, kExitNoConverge = 2, kExitValidation = 3;

struct CommonSolveFlags {
    int width = 3;
    std::string dirs_file;
    double tolerance = 1e-6;
    int max_iters = 50;
    bool serial = false;
    int threads = 0;  // 0 = leave runtime default
    bool check = false;
};

void add_solver_flags(CLI::App* cmd, CommonSolveFlags& f) {
    cmd->add_option("--width,-w", f.width, "lattice direction width W")->check(CLI::PositiveNumber);
    cmd->add_option("--dirs", f.dirs_file, "file with one integer direction vector per line");
    cmd->add_option("--tol", f.tolerance, "outer-iteration convergence tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-iters", f.max_iters, "outer iteration cap")->check(CLI::PositiveNumber);
    cmd->add_flag("--serial", f.serial, "use the serial reference path");
    cmd->add_option("--threads", f.threads, "worker thread count")->check(CLI::PositiveNumber);
}

qce::DirectionSet load_directions(const CommonSolveFlags& f, int dim) {
    if (f.dirs_file.empty()) return qce::lattice_directions(dim, f.width);
    std::ifstream in(f.dirs_file);
    if (!in) throw std::runtime_error("cannot open directions file: " + f.dirs_file);
    qce::DirectionSet D;
    D.dim = dim;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::array<int, 3> v{0, 0, 0};
        std::istringstream ls(line);
        for (int a = 0; a < dim; ++a)
            if (!(ls >> v[a])) throw std::runtime_error("bad direction line: " + line);
        D.vectors.push_back(qce::canonicalize(v));
    }
    std::sort(D.vectors.begin(), D.vectors.end());
    D.vectors.erase(std::unique(D.vectors.begin(), D.vectors.end()), D.vectors.end());
    if (D.vectors.empty()) throw std::runtime_error("directions file is empty");
    return D;
}

qce::SolveParams solve_params(const CommonSolveFlags& f) {
    if (f.threads > 0) omp_set_num_threads(f.threads);
    qce::SolveParams p;
    p.tolerance = f.tolerance;
    p.max_outer_iterations = f.max_iters;
    p.execution = f.serial ? qce::Execution::serial : qce::Execution::parallel;
    return p;
}

json direction_json(const std::array<int, 3>& v, int dim) {
    json a = json::array();
    for (int i = 0; i < dim; ++i) a.push_back(v[i]);
    return a;
}

json violation_json(const qce::ViolationReport& rep, int dim) {
    return json{{"max", rep.max_violation},
                {"worst_triple", {rep.worst_triple[0], rep.worst_triple[1], rep.worst_triple[2]}},
                {"direction", direction_json(rep.worst_direction, dim)},
                {"count_above", rep.count_above},
                {"threshold", rep.threshold}};
}

json report_json(const std::string& command, const json& params, const qce::SolveReport* solve,
                 const json& violation, const std::vector<std::string>& files) {
    json j{{"version", kToolVersion}, {"command", command}, {"params", params}};
    if (solve) {
        j["iterations"] = solve->outer_iterations;
        j["max_change"] = solve->max_change_per_iteration;
        j["converged"] = solve->converged;
    }
    // wall time is deliberately not part of the report file: identical runs
    // must produce identical bytes.
    j["violation"] = violation;
    j["files"] = files;
    return j;
}

void write_report(const std::string& path, const json& j) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << "\n";
}

// ---- gen ----------------------------------------------------------------

struct GenArgs {
    std::string preset;
    std::vector<int> shape;
    std::vector<double> domain;
    std::optional<double> theta, alpha, radius;
    std::string combiner = "min";
    std::string out = "out.grid";
};

int run_gen(const GenArgs& a) {
    int dim = 2;
    qce::Box box;
    qce::Sampler f;
    double theta = a.theta.value_or(0.0), alpha = a.alpha.value_or(0.0);
    const qce::Combiner comb =
        a.combiner == "max" ? qce::Combiner::max_of : qce::Combiner::min_of;
    std::vector<int> shape = a.shape;

    if (a.preset == "cones2d" || a.preset == "cones2d-rotated") {
        dim = 2;
        if (!a.theta) theta = a.preset == "cones2d" ? 0.0 : std::atan(1.0 / 3.0) / 2.0;
        if (!a.alpha) alpha = a.preset == "cones2d" ? 1.0 / 3.0 : 0.0;
        box = qce::Box::cube(2, -1.5, 1.5);
        if (shape.empty()) shape = {64, 64};
        f = qce::two_cones({2, theta, alpha, comb});
    } else if (a.preset == "cones3d") {
        dim = 3;
        if (!a.alpha) alpha = 1.0 / 3.0;
        box = qce::Box::cube(3, -1.5, 1.5);
        if (shape.empty()) shape = {64, 64, 64};
        f = qce::two_cones({3, theta, alpha, comb});
    } else if (a.preset == "pacman") {
        dim = 2;
        box = qce::Box::cube(2, -1.5, 1.5);
        if (shape.empty()) shape = {64, 64};
        f = qce::pacman_sdf({0.0, 0.0}, a.radius.value_or(1.0), 0);
    } else if (a.preset == "plateau") {
        dim = 2;
        box = qce::Box::cube(2, -1.5, 1.5);
        if (shape.empty()) shape = {64, 64};
        f = qce::chebyshev_plateau();
    } else if (a.preset == "dist1d") {
        dim = 1;
        box = qce::Box::cube(1, -2.0, 2.0);
        if (shape.empty()) shape = {65};
        f = qce::neg_dist_to_interval();
    } else {
        throw std::runtime_error("unknown preset: " + a.preset);
    }

    if (!a.domain.empty()) {
        if (a.domain.size() != 2 || !(a.domain[0] < a.domain[1]))
            throw std::runtime_error("--domain wants lo hi with lo < hi");
        box = qce::Box::cube(dim, a.domain[0], a.domain[1]);
    }
    if (static_cast<int>(shape.size()) != dim)
        throw std::runtime_error("--shape wants " + std::to_string(dim) + " entries for " +
                                 a.preset);

    const qce::GridFn g = qce::build(box, shape, f);
    qce::write_grid(g, a.out);
    std::cout << "preset=" << a.preset << " dim=" << dim << " shape=";
    for (size_t i = 0; i < shape.size(); ++i) std::cout << (i ? "x" : "") << shape[i];
    std::cout << " domain=[" << box.lo[0] << "," << box.hi[0] << "]";
    if (a.preset.rfind("cones", 0) == 0)
        std::cout << " theta=" << theta << " alpha=" << alpha << " combiner=" << a.combiner;
    std::cout << " -> " << a.out << "\n";
    return kExitOk;
}

// ---- solve / robust ------------------------------------------------------

struct SolveArgs {
    std::string input;
    CommonSolveFlags flags;
    std::optional<double> epsilon;  // set for the robust command
    std::string out = "envelope.grid";
    std::string report;
    std::string out_vtk;
};

int run_solve(const SolveArgs& a) {
    const qce::GridFn g = qce::read_grid(a.input);
    const qce::DirectionSet D = load_directions(a.flags, g.dim);
    const qce::SolveParams params = solve_params(a.flags);

    auto [u, rep] = a.epsilon ? qce::robust_solve(g, D, *a.epsilon, params)
                              : qce::solve(g, D, params);
    qce::write_grid(u, a.out);
    std::vector<std::string> files{a.out};
    if (!a.out_vtk.empty()) {
        qce::write_vtk(u, a.out_vtk);
        files.push_back(a.out_vtk);
    }

    json viol = nullptr;
    if (a.flags.check) {
        const auto v = qce::qc_violation(u, D, a.epsilon.value_or(0.0));
        viol = violation_json(v, g.dim);
    }
    json params_j{{"input", a.input},
                  {"directions", a.flags.dirs_file.empty() ? "W=" + std::to_string(a.flags.width)
                                                           : a.flags.dirs_file},
                  {"tolerance", a.flags.tolerance},
                  {"max_iterations", a.flags.max_iters}};
    if (a.epsilon) params_j["epsilon"] = *a.epsilon;
    const json report =
        report_json(a.epsilon ? "robust" : "solve", params_j, &rep, viol, files);
    write_report(a.report, report);
    if (!a.report.empty()) files.push_back(a.report);

    std::cout << report.dump(2) << "\n";
    std::fprintf(stderr, "%s in %d iterations, %.3f s\n",
                 rep.converged ? "converged" : "did NOT converge", rep.outer_iterations,
                 rep.wall_time);
    return rep.converged ? kExitOk : kExitNoConverge;
}

// ---- check ----------------------------------------------------------------

int run_check(const std::string& input, const CommonSolveFlags& flags,
              std::optional<double> epsilon, double threshold, const std::string& report_path) {
    const qce::GridFn u = qce::read_grid(input);
    const qce::DirectionSet D = load_directions(flags, u.dim);
    const auto v = qce::qc_violation(u, D, epsilon.value_or(0.0), threshold);
    json params_j{{"input", input}, {"width", flags.width}, {"threshold", threshold}};
    if (epsilon) params_j["epsilon"] = *epsilon;
    const json rep = report_json("check", params_j, nullptr, violation_json(v, u.dim), {});
    write_report(report_path, rep);
    std::cout << rep.dump(2) << "\n";
    return kExitOk;
}

// ---- dtheta ----------------------------------------------------------------

int run_dtheta(int dim, int width, int equally_spaced) {
    double rad;
    if (equally_spaced > 0) {
        const auto dirs = qce::equally_spaced_2d(equally_spaced);
        rad = qce::directional_resolution_2d(dirs);
    } else {
        rad = qce::directional_resolution(qce::lattice_directions(dim, width));
    }
    std::printf("%.12f rad (%.4f deg)\n", rad, rad * 180.0 / 3.14159265358979323846);
    return kExitOk;
}

// ---- hull ------------------------------------------------------------------

struct HullArgs {
    std::string input;
    CommonSolveFlags flags;
    double alpha = 0.0;
    std::string out_grid = "hull_envelope.grid";
    std::string out_mask = "hull_mask.pbm";
    std::string report;
};

int run_hull(const HullArgs& a) {
    const qce::GridFn g = qce::read_grid(a.input);
    if (g.dim != 2) throw std::runtime_error("hull: 2D grids only");
    const qce::DirectionSet D = load_directions(a.flags, g.dim);
    const auto hull = qce::hull_via_qce(g, a.alpha, D, solve_params(a.flags));
    const qce::Mask input_mask = qce::sublevel_mask(g, a.alpha);
    if (input_mask.count() == 0)
        throw std::runtime_error("hull: sublevel set at alpha is empty");
    const qce::Mask oracle = qce::convex_hull_oracle(input_mask);
    const auto diff = qce::mask_diff(hull.mask, oracle);

    qce::write_grid(hull.u, a.out_grid);
    qce::write_pbm(hull.mask, a.out_mask);
    const json params_j{{"input", a.input}, {"alpha", a.alpha},
                        {"width", a.flags.width}, {"tolerance", a.flags.tolerance}};
    json rep = report_json("hull", params_j, &hull.report, nullptr, {a.out_grid, a.out_mask});
    rep["hull_diff"] = {{"count", diff.count},
                        {"fraction", diff.fraction},
                        {"envelope_mask_cells", hull.mask.count()},
                        {"oracle_mask_cells", oracle.count()}};
    write_report(a.report, rep);
    std::cout << rep.dump(2) << "\n";
    return hull.report.converged ? kExitOk : kExitNoConverge;
}

// ---- render ----------------------------------------------------------------

struct RenderArgs {
    std::string input;
    std::string overlay;
    int levels = 8;
    std::vector<double> level_values;
    std::string out = "contours.svg";
};

int run_render(const RenderArgs& a) {
    const qce::GridFn g = qce::read_grid(a.input);
    if (g.dim != 2) throw std::runtime_error("render: 2D grids only");
    std::vector<double> levels = a.level_values;
    if (levels.empty()) {
        const auto [lo, hi] =
            std::minmax_element(g.values.begin(), g.values.end());
        // interior levels: min + k (max-min)/(n+1), k = 1..n
        for (int k = 1; k <= a.levels; ++k)
            if (*hi > *lo) levels.push_back(*lo + k * (*hi - *lo) / (a.levels + 1));
    }
    const qce::ContourSet solid = qce::marching_squares(g, levels);
    qce::ContourSet dashed;
    if (!a.overlay.empty()) {
        const qce::GridFn u = qce::read_grid(a.overlay);
        if (u.dim != 2 || u.shape != g.shape)
            throw std::runtime_error("render: overlay grid shape mismatch");
        dashed = qce::marching_squares(u, levels);
    }
    qce::write_svg_contours(a.out, g, solid, a.overlay.empty() ? nullptr : &dashed);
    std::cout << "wrote " << a.out << " with " << levels.size() << " levels\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasiconvex envelope toolkit"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* cgen = app.add_subcommand("gen", "sample a named test function onto a grid file");
    cgen->add_option("preset", gen.preset, "one of cones2d, cones2d-rotated, cones3d, pacman, plateau, dist1d")
        ->required()
        ->check(CLI::IsMember({"cones2d", "cones2d-rotated", "cones3d", "pacman", "plateau", "dist1d"}));
    cgen->add_option("--shape", gen.shape, "per-axis sample counts")->expected(1, 3);
    cgen->add_option("--domain", gen.domain, "domain interval lo hi, same on every axis")->expected(2);
    double theta_in = 0, alpha_in = 0, radius_in = 0;
    auto* topt = cgen->add_option("--theta", theta_in, "cone axis rotation (radians)");
    auto* aopt = cgen->add_option("--alpha", alpha_in, "vertical shift of the second cone");
    auto* ropt = cgen->add_option("--radius", radius_in, "pacman radius")->check(CLI::PositiveNumber);
    cgen->add_option("--combiner", gen.combiner, "min or max")->check(CLI::IsMember({"min", "max"}));
    cgen->add_option("--out,-o", gen.out, "output grid file");

    SolveArgs solve_args;
    auto* csolve = app.add_subcommand("solve", "compute the quasiconvex envelope of a grid");
    csolve->add_option("input", solve_args.input, "input grid file")->required();
    add_solver_flags(csolve, solve_args.flags);
    csolve->add_option("--out,-o", solve_args.out, "output grid file");
    csolve->add_option("--report", solve_args.report, "JSON report path");
    csolve->add_option("--out-vtk", solve_args.out_vtk, "also write a VTK structured-points file");
    csolve->add_flag("--check", solve_args.flags.check, "measure triple violations of the output");

    SolveArgs robust_args;
    double eps_in = 0.0;
    auto* crobust = app.add_subcommand("robust", "compute the eps-robust quasiconvex envelope");
    crobust->add_option("input", robust_args.input, "input grid file")->required();
    crobust->add_option("--epsilon,-e", eps_in, "slope budget eps >= 0")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_solver_flags(crobust, robust_args.flags);
    crobust->add_option("--out,-o", robust_args.out, "output grid file");
    crobust->add_option("--report", robust_args.report, "JSON report path");
    crobust->add_option("--out-vtk", robust_args.out_vtk, "also write a VTK structured-points file");
    crobust->add_flag("--check", robust_args.flags.check, "measure triple violations of the output");

    std::string check_input, check_report;
    CommonSolveFlags check_flags;
    std::optional<double> check_eps;
    double check_eps_in = 0.0, check_threshold = 1e-12;
    auto* ccheck = app.add_subcommand("check", "measure quasiconvexity violations of a grid");
    ccheck->add_option("input", check_input, "grid file")->required();
    ccheck->add_option("--width,-w", check_flags.width, "lattice direction width W")
        ->check(CLI::PositiveNumber);
    ccheck->add_option("--dirs", check_flags.dirs_file, "directions file");
    auto* ceps = ccheck->add_option("--epsilon,-e", check_eps_in, "robust slope budget")
                     ->check(CLI::NonNegativeNumber);
    ccheck->add_option("--threshold", check_threshold, "violation counting threshold");
    ccheck->add_option("--report", check_report, "JSON report path");

    int dt_dim = 2, dt_width = 3, dt_equal = 0;
    auto* cdtheta = app.add_subcommand("dtheta", "directional resolution of a direction set");
    cdtheta->add_option("--dim", dt_dim, "2 or 3")->check(CLI::Range(2, 3));
    cdtheta->add_option("--width,-w", dt_width, "lattice width W")->check(CLI::PositiveNumber);
    cdtheta->add_option("--equally-spaced", dt_equal, "use k equally spaced 2D directions")
        ->check(CLI::PositiveNumber);

    HullArgs hull_args;
    auto* chull = app.add_subcommand("hull", "convex hull of a sublevel set via the envelope");
    chull->add_option("input", hull_args.input, "input grid file")->required();
    chull->add_option("--alpha", hull_args.alpha, "sublevel threshold");
    add_solver_flags(chull, hull_args.flags);
    chull->add_option("--out-grid", hull_args.out_grid, "envelope grid path");
    chull->add_option("--out-mask", hull_args.out_mask, "hull mask PBM path");
    chull->add_option("--report", hull_args.report, "JSON report path");

    RenderArgs render_args;
    auto* crender = app.add_subcommand("render", "write SVG contours of a grid");
    crender->add_option("input", render_args.input, "input grid file")->required();
    crender->add_option("--levels", render_args.levels, "number of evenly spaced levels")
        ->check(CLI::PositiveNumber);
    crender->add_option("--level-values", render_args.level_values, "explicit level values")
        ->expected(-1);
    crender->add_option("--overlay", render_args.overlay, "second grid drawn dashed");
    crender->add_option("--out,-o", render_args.out, "output SVG path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cgen->parsed()) {
            if (*topt) gen.theta = theta_in;
            if (*aopt) gen.alpha = alpha_in;
            if (*ropt) gen.radius = radius_in;
            return run_gen(gen);
        }
        if (csolve->parsed()) return run_solve(solve_args);
        if (crobust->parsed()) {
            robust_args.epsilon = eps_in;
            return run_solve(robust_args);
        }
        if (ccheck->parsed()) {
            if (*ceps) check_eps = check_eps_in;
            return run_check(check_input, check_flags, check_eps, check_threshold, check_report);
        }
        if (cdtheta->parsed()) return run_dtheta(dt_dim, dt_width, dt_equal);
        if (chull->parsed()) return run_hull(hull_args);
        if (crender->parsed()) return run_render(render_args);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    }
    return kExitUsage;
}
