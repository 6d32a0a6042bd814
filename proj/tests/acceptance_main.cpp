// Acceptance gate: twelve numbered criteria, each printing one PASS/FAIL
// line. Exit status is the number of failed criteria. Checks are always on
// (no NDEBUG dependence); tolerances are part of the contract and must not
// be loosened to make a run green.

#include <omp.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <iterator>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "qce/directions.hpp"
#include "qce/envelope1d.hpp"
#include "qce/grid.hpp"
#include "qce/levelset.hpp"
#include "qce/line_sweep.hpp"
#include "qce/oracles.hpp"
#include "qce/testfns.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

std::vector<std::string> g_failures;  // failures of the criterion under test

void fail(const char* fmt, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    if (g_failures.size() < 8) g_failures.emplace_back(buf);  // keep output short
    else if (g_failures.size() == 8) g_failures.emplace_back("... more failures suppressed");
}

#define REQ(cond, ...)                 \
    do {                               \
        if (!(cond)) fail(__VA_ARGS__); \
    } while (0)

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

qce::Seq random_seq(std::mt19937& rng, int n, double step = 1.0) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    qce::Seq g;
    g.step = step;
    g.values.resize(n);
    for (double& v : g.values) v = dist(rng);
    return g;
}

qce::GridFn random_grid(std::mt19937& rng, int dim, std::array<int, 3> shape) {
    qce::GridFn g;
    g.dim = dim;
    for (int a = 0; a < dim; ++a) g.shape[a] = shape[a];
    g.values.resize(g.size());
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (double& v : g.values) v = dist(rng);
    return g;
}

constexpr double kExact = std::numeric_limits<double>::denorm_min();

qce::SolveParams exact_params(int max_iters) {
    qce::SolveParams p;
    p.tolerance = kExact;  // change < denorm_min means change == 0
    p.max_outer_iterations = max_iters;
    return p;
}

// Quadratic-time reference for the 1D envelope: each position recomputes its
// prefix and suffix minima from scratch.
std::vector<double> direct_reference_1d(const std::vector<double>& v) {
    const int n = static_cast<int>(v.size());
    std::vector<double> out(v.size());
    for (int i = 0; i < n; ++i) {
        double pre = v[0], suf = v[n - 1];
        for (int k = 1; k <= i; ++k) pre = std::min(pre, v[k]);
        for (int k = n - 2; k >= i; --k) suf = std::min(suf, v[k]);
        out[i] = std::max(pre, suf);
    }
    return out;
}

// Cells within Chebyshev distance `band` of a boundary cell of `m` (a cell
// whose 8-neighbourhood crosses the mask edge).
bool near_mask_boundary(const qce::Mask& m, int i, int j, int band) {
    const int n0 = m.shape[0], n1 = m.shape[1];
    for (int di = -band; di <= band; ++di)
        for (int dj = -band; dj <= band; ++dj) {
            const int bi = i + di, bj = j + dj;
            if (bi < 0 || bj < 0 || bi >= n0 || bj >= n1) continue;
            // bi,bj is a boundary cell if some neighbour differs from it
            const std::uint8_t c = m.on[m.flat(bi, bj)];
            for (int ei = -1; ei <= 1; ++ei)
                for (int ej = -1; ej <= 1; ++ej) {
                    const int ni = bi + ei, nj = bj + ej;
                    if (ni < 0 || nj < 0 || ni >= n0 || nj >= n1) continue;
                    if (m.on[m.flat(ni, nj)] != c) return true;
                }
        }
    return false;
}

// ---- criterion 1 ----------------------------------------------------------

void criterion_1() {
    const auto t0 = clock_type::now();
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> len(2, 1000);
    for (int trial = 0; trial < 1000; ++trial) {
        const qce::Seq g = random_seq(rng, len(rng));
        const qce::Seq u = qce::qce_1d(g);
        const std::vector<double> ref = direct_reference_1d(g.values);
        if (u.values != ref) {
            fail("trial %d: fast envelope deviates from the direct reference", trial);
            return;
        }
    }
    const double dt = seconds_since(t0);
    REQ(dt < 5.0, "1000 sequences took %.2fs, budget is 5s", dt);
}

// ---- criterion 2 ----------------------------------------------------------

void criterion_2() {
    std::mt19937 rng(202);
    std::uniform_int_distribution<int> len(1, 400);
    for (int trial = 0; trial < 1000; ++trial) {
        const qce::Seq g = random_seq(rng, len(rng));
        const qce::Seq u = qce::qce_1d(g);
        if (!qce::is_down_up(u)) fail("trial %d: output is not down-up", trial);
        for (size_t i = 0; i < g.values.size(); ++i)
            if (u.values[i] > g.values[i]) fail("trial %d: output exceeds input at %zu", trial, i);
        if (u.values.front() != g.values.front() || u.values.back() != g.values.back())
            fail("trial %d: endpoints moved", trial);
        if (qce::qce_1d(u).values != u.values) fail("trial %d: not idempotent", trial);
        if (!g_failures.empty()) return;
    }
    std::uniform_real_distribution<double> lift(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const qce::Seq g = random_seq(rng, 2 + trial % 100);
        qce::Seq h = g;
        for (double& v : h.values) v += lift(rng);
        const qce::Seq ug = qce::qce_1d(g), uh = qce::qce_1d(h);
        for (size_t i = 0; i < g.values.size(); ++i)
            if (ug.values[i] > uh.values[i]) {
                fail("pair %d: comparison violated at %zu", trial, i);
                return;
            }
    }
}

// ---- criterion 3 ----------------------------------------------------------

void criterion_3() {
    std::mt19937 rng(303);
    std::uniform_int_distribution<int> len(3, 64);
    const double eps_grid[] = {0.1, 0.5, 1.0, 5.0};
    for (int trial = 0; trial < 500; ++trial) {
        const double step = trial % 2 == 0 ? 1.0 : 0.25;
        const qce::Seq g = random_seq(rng, len(rng), step);
        const double eps = eps_grid[trial % 4];
        const qce::Seq u = qce::robust_qce_1d(g, {eps});
        const qce::Seq o = qce::robust_qce_oracle_1d(g, eps);
        for (size_t i = 0; i < g.values.size(); ++i)
            if (std::abs(u.values[i] - o.values[i]) > 1e-9) {
                fail("trial %d (eps=%g): |u-oracle| = %.3g at %zu", trial, eps,
                     std::abs(u.values[i] - o.values[i]), i);
                return;
            }
    }
    for (int trial = 0; trial < 100; ++trial) {
        const qce::Seq g = random_seq(rng, len(rng));
        if (qce::robust_qce_1d(g, {0.0}).values != qce::qce_1d(g).values) {
            fail("eps=0 does not reproduce the plain envelope bitwise (trial %d)", trial);
            return;
        }
    }
    const qce::Seq a = qce::robust_qce_1d({{0, 1, 1, 2}, 1.0}, {0.5});
    REQ(a.values == (std::vector<double>{0, 0.5, 1, 2}),
        "hand case [0,1,1,2] at eps=1/2: got [%g,%g,%g,%g]", a.values[0], a.values[1], a.values[2],
        a.values[3]);
    const qce::Seq b = qce::robust_qce_1d({{1, 0, 0, 1}, 1.0}, {0.5});
    REQ(b.values == (std::vector<double>{1, 0, 0, 1}),
        "hand case [1,0,0,1] at eps=1/2 must be a fixed point");
}

// ---- criterion 4 ----------------------------------------------------------

void criterion_4() {
    const auto t0 = clock_type::now();
    std::mt19937 rng(404);
    for (int trial = 0; trial < 50; ++trial) {
        const qce::GridFn g = random_grid(rng, 2, {9, 9, 1});
        for (int w : {1, 2}) {
            const qce::DirectionSet D = qce::lattice_directions(2, w);
            const auto [u, rep] = qce::solve(g, D, exact_params(1000));
            if (!rep.converged) {
                fail("2D trial %d W=%d: no exact fixed point in 1000 iterations", trial, w);
                return;
            }
            const qce::GridFn o = qce::dqce_oracle(g, D);
            for (size_t i = 0; i < u.values.size(); ++i)
                if (std::abs(u.values[i] - o.values[i]) > 1e-9) {
                    fail("2D trial %d W=%d: |solve-oracle| = %.3g", trial, w,
                         std::abs(u.values[i] - o.values[i]));
                    return;
                }
        }
    }
    for (int trial = 0; trial < 10; ++trial) {
        const qce::GridFn g = random_grid(rng, 3, {5, 5, 5});
        const qce::DirectionSet D = qce::lattice_directions(3, 1);
        const auto [u, rep] = qce::solve(g, D, exact_params(1000));
        if (!rep.converged) {
            fail("3D trial %d: no exact fixed point in 1000 iterations", trial);
            return;
        }
        const qce::GridFn o = qce::dqce_oracle(g, D);
        for (size_t i = 0; i < u.values.size(); ++i)
            if (std::abs(u.values[i] - o.values[i]) > 1e-9) {
                fail("3D trial %d: |solve-oracle| = %.3g", trial,
                     std::abs(u.values[i] - o.values[i]));
                return;
            }
    }
    const double dt = seconds_since(t0);
    REQ(dt < 60.0, "oracle comparison took %.2fs, budget is 60s", dt);
}

// ---- criterion 5 ----------------------------------------------------------

void criterion_5() {
    const qce::Box box = qce::Box::cube(2, -1.5, 1.5);
    const std::array<int, 2> shape{64, 64};

    // Axis-aligned vertices, axis directions: one outer iteration does all
    // the work, the second must change nothing at all.
    {
        const qce::GridFn g = qce::build(
            box, shape, qce::two_cones({2, 0.0, 1.0 / 3.0, qce::Combiner::min_of}));
        qce::DirectionSet axes;
        axes.dim = 2;
        axes.vectors = {{1, 0, 0}, {0, 1, 0}};
        const auto [u, rep] = qce::solve(g, axes, exact_params(5));
        REQ(rep.max_change_per_iteration.size() >= 2,
            "axis solve stopped after %zu iterations", rep.max_change_per_iteration.size());
        if (rep.max_change_per_iteration.size() >= 2)
            REQ(rep.max_change_per_iteration[1] == 0.0,
                "second outer iteration still changed values by %.3g",
                rep.max_change_per_iteration[1]);
    }

    // Every shipped 2D sample converges within 10 outer iterations at 1e-6.
    struct Sample {
        const char* name;
        qce::Sampler f;
    };
    const Sample samples[] = {
        {"cones", qce::two_cones({2, 0.0, 1.0 / 3.0, qce::Combiner::min_of})},
        {"cones-rotated", qce::two_cones({2, std::atan(1.0 / 3.0) / 2, 0.0, qce::Combiner::min_of})},
        {"pacman", qce::pacman_sdf()},
        {"plateau", qce::chebyshev_plateau()},
    };
    for (const auto& s : samples) {
        const qce::GridFn g = qce::build(box, shape, s.f);
        for (int w : {3, 5}) {
            qce::SolveParams p;
            p.tolerance = 1e-6;
            p.max_outer_iterations = 10;
            const auto [u, rep] = qce::solve(g, qce::lattice_directions(2, w), p);
            REQ(rep.converged, "%s at W=%d: not converged within 10 iterations (last change %.3g)",
                s.name, w,
                rep.max_change_per_iteration.empty() ? -1.0
                                                     : rep.max_change_per_iteration.back());
        }
    }
}

// ---- criterion 6 ----------------------------------------------------------

void criterion_6() {
    const qce::Box box = qce::Box::cube(2, -1.5, 1.5);
    const qce::GridFn g = qce::build(
        box, std::array<int, 2>{9, 9}, qce::two_cones({2, 0.0, 1.0 / 3.0, qce::Combiner::min_of}));
    for (int w : {1, 2}) {
        const qce::DirectionSet D = qce::lattice_directions(2, w);
        const qce::GridFn target = qce::dqce_oracle(g, D);
        std::vector<qce::GridFn> iterates;
        qce::SolveParams p = exact_params(500);
        p.on_iterate = [&](const qce::GridFn& u, int) { iterates.push_back(u); };
        const auto [u, rep] = qce::solve(g, D, p);
        REQ(rep.converged, "W=%d: no exact fixed point in 500 iterations", w);
        const qce::GridFn* prev = &g;
        for (size_t k = 0; k < iterates.size(); ++k) {
            for (size_t i = 0; i < g.values.size(); ++i) {
                if (iterates[k].values[i] > prev->values[i]) {
                    fail("W=%d: iterate %zu increased at cell %zu", w, k, i);
                    return;
                }
                if (iterates[k].values[i] < target.values[i] - 1e-12) {
                    fail("W=%d: iterate %zu fell below the envelope at cell %zu by %.3g", w, k, i,
                         target.values[i] - iterates[k].values[i]);
                    return;
                }
            }
            prev = &iterates[k];
        }
    }
}

// ---- criterion 7 ----------------------------------------------------------

void criterion_7() {
    const double r3 = qce::directional_resolution(qce::lattice_directions(2, 3));
    REQ(std::abs(r3 - std::atan(1.0 / 3.0) / 2) <= 1e-12,
        "resolution of the width-3 set is %.15f, want atan(1/3)/2 = %.15f", r3,
        std::atan(1.0 / 3.0) / 2);
    double prev = std::numeric_limits<double>::infinity();
    for (int w = 1; w <= 6; ++w) {
        const double r = qce::directional_resolution(qce::lattice_directions(2, w));
        REQ(r <= prev, "resolution grew from W=%d to W=%d (%.12f -> %.12f)", w - 1, w, prev, r);
        prev = r;
    }
    for (int k : {2, 3, 4, 8, 16, 32}) {
        const double r = qce::directional_resolution_2d(qce::equally_spaced_2d(k));
        const double want = 3.14159265358979323846 / (2 * k);
        REQ(std::abs(r - want) <= 1e-12, "equally spaced k=%d: %.15f, want pi/(2k)=%.15f", k, r,
            want);
    }
}

// ---- criterion 8 ----------------------------------------------------------

void criterion_8() {
    const qce::Box box = qce::Box::cube(2, -1.5, 1.5);
    const double theta = std::atan(1.0 / 3.0) / 2;  // worst angle for width 3
    const qce::GridFn g =
        qce::build(box, std::array<int, 2>{64, 64},
                   qce::two_cones({2, theta, 0.0, qce::Combiner::min_of}));
    const qce::DirectionSet D3 = qce::lattice_directions(2, 3);
    const qce::DirectionSet D6 = qce::lattice_directions(2, 6);

    qce::SolveParams p;
    p.tolerance = 1e-9;
    p.max_outer_iterations = 50;
    const auto [u, rep] = qce::solve(g, D3, p);
    REQ(rep.converged, "width-3 solve did not converge");
    // the width-3 fixed point misses convexity along the tilted vertex line;
    // the width-6 set contains (6,1) and sees it
    const auto viol = qce::qc_violation(u, D6);
    REQ(viol.max_violation > 1e-9, "width-6 directions see no violation (max %.3g)",
        viol.max_violation);

    // the robust envelope at eps=0.15 restores convex sublevel sets up to a
    // 2-cell boundary band
    const auto [ur, repr] = qce::robust_solve(g, D3, 0.15, p);
    REQ(repr.converged, "robust width-3 solve did not converge");
    const auto [lo_it, hi_it] = std::minmax_element(ur.values.begin(), ur.values.end());
    for (int k = 1; k <= 5; ++k) {
        const double level = *lo_it + k * (*hi_it - *lo_it) / 6.0;
        const qce::Mask m = qce::sublevel_mask(ur, level);
        if (m.count() == 0) {
            fail("level %d: empty sublevel mask", k);
            continue;
        }
        const qce::Mask hull = qce::convex_hull_oracle(m);
        size_t off_band = 0;
        for (int i = 0; i < 64; ++i)
            for (int j = 0; j < 64; ++j)
                if (m.on[m.flat(i, j)] != hull.on[hull.flat(i, j)] &&
                    !near_mask_boundary(hull, i, j, 2))
                    ++off_band;
        REQ(off_band == 0, "level %d: %zu non-convexity cells beyond the 2-cell band", k,
            off_band);
    }
}

// ---- criterion 9 ----------------------------------------------------------

void criterion_9() {
    const qce::Box box = qce::Box::cube(2, -1.5, 1.5);
    const qce::GridFn g = qce::build(box, std::array<int, 2>{64, 64}, qce::chebyshev_plateau());
    const qce::DirectionSet D = qce::lattice_directions(2, 5);
    const double eps = 0.8;

    qce::SolveParams p;
    p.tolerance = 1e-10;
    p.max_outer_iterations = 500;
    const auto [u, rep] = qce::robust_solve(g, D, eps, p);
    REQ(rep.converged, "robust plateau solve did not converge");

    // (a) the tilt budget digs at least 0.1 into the plateau interior
    // (cells of value 10 farther than 3 in Chebyshev distance from any
    // non-plateau cell)
    int interior_cells = 0;
    for (int i = 0; i < 64; ++i)
        for (int j = 0; j < 64; ++j) {
            if (g.at({i, j, 0}) != 10.0) continue;
            bool interior = true;
            for (int di = -3; di <= 3 && interior; ++di)
                for (int dj = -3; dj <= 3 && interior; ++dj) {
                    const int ni = i + di, nj = j + dj;
                    if (ni < 0 || nj < 0 || ni >= 64 || nj >= 64) continue;
                    if (g.at({ni, nj, 0}) != 10.0) interior = false;
                }
            if (!interior) continue;
            ++interior_cells;
            const double drop = g.at({i, j, 0}) - u.at({i, j, 0});
            if (drop < 0.1) {
                fail("plateau interior cell (%d,%d) only dropped %.4f", i, j, drop);
                return;
            }
        }
    REQ(interior_cells > 0, "erosion removed the whole plateau interior");

    // (b) the global minimiser keeps its exact value
    const qce::MinInfo mi = qce::min_info(g);
    for (size_t f : mi.argmin_indices)
        REQ(u.values[f] == g.values[f], "argmin cell %zu changed from %.17g to %.17g", f,
            g.values[f], u.values[f]);

    // (c) every lattice line of every direction is robust-quasiconvex with
    // the line's arc step
    for (const auto& v : D.vectors) {
        const double h = qce::arc_step(u, v);
        for (const auto& line : qce::enumerate_lines(u.shape, v)) {
            if (line.count < 3) continue;
            qce::Seq s;
            s.step = h;
            s.values.resize(line.count);
            for (int t = 0; t < line.count; ++t)
                s.values[t] = u.at({line.start[0] + t * line.step[0],
                                    line.start[1] + t * line.step[1],
                                    line.start[2] + t * line.step[2]});
            if (!qce::is_robust_qc_1d(s, eps, 1e-9)) {
                fail("line from (%d,%d) along (%d,%d) violates the robust bound", line.start[0],
                     line.start[1], v[0], v[1]);
                return;
            }
        }
    }
}

// ---- criterion 10 ---------------------------------------------------------

void criterion_10() {
    const qce::Box box = qce::Box::cube(2, -1.5, 1.5);
    const qce::GridFn g = qce::build(box, std::array<int, 2>{64, 64}, qce::pacman_sdf());
    const qce::DirectionSet D = qce::lattice_directions(2, 3);

    const auto hull = qce::hull_via_qce(g, 0.0, D, exact_params(500));
    REQ(hull.report.converged, "pacman solve did not reach its exact fixed point");

    const qce::Mask target = qce::convex_hull_oracle(qce::sublevel_mask(g, 0.0));
    size_t diff = 0, off_band = 0;
    for (int i = 0; i < 64; ++i)
        for (int j = 0; j < 64; ++j) {
            if (hull.mask.on[hull.mask.flat(i, j)] == target.on[target.flat(i, j)]) continue;
            ++diff;
            if (!near_mask_boundary(target, i, j, 2)) ++off_band;
        }
    REQ(off_band == 0, "%zu mismatching cells beyond the 2-cell hull band", off_band);
    const auto md = qce::mask_diff(hull.mask, target);
    REQ(md.fraction < 0.05, "mask disagreement fraction %.4f exceeds 0.05", md.fraction);
    REQ(md.count == diff, "mask_diff disagrees with the direct count (%zu vs %zu)", md.count,
        diff);

    // strictly increasing value transform t^3 + t: same hull mask, bitwise
    qce::GridFn gp = g;
    for (double& v : gp.values) v = v * v * v + v;
    const auto hull_p = qce::hull_via_qce(gp, 0.0, D, exact_params(500));
    REQ(hull_p.report.converged, "transformed solve did not reach its exact fixed point");
    REQ(hull_p.mask.on == hull.mask.on, "hull mask changed under the monotone transform");
}

// ---- criterion 11 ---------------------------------------------------------

void criterion_11() {
    const auto t0 = clock_type::now();
    const qce::Box box = qce::Box::cube(3, -1.5, 1.5);
    const qce::Sampler f = qce::two_cones({3, 0.0, 1.0 / 3.0, qce::Combiner::min_of});

    {
        const qce::GridFn g = qce::build(box, std::array<int, 3>{64, 64, 64}, f);
        qce::SolveParams p;
        p.tolerance = 1e-6;
        p.max_outer_iterations = 10;
        const auto [u, rep] = qce::solve(g, qce::lattice_directions(3, 2), p);
        REQ(rep.converged, "64^3 solve not converged in 10 iterations (last change %.3g)",
            rep.max_change_per_iteration.empty() ? -1.0 : rep.max_change_per_iteration.back());
    }
    {
        const qce::GridFn g = qce::build(box, std::array<int, 3>{16, 16, 16}, f);
        const qce::DirectionSet D = qce::lattice_directions(3, 1);
        const auto [u, rep] = qce::solve(g, D, exact_params(1000));
        REQ(rep.converged, "16^3 solve found no exact fixed point");
        const qce::GridFn o = qce::dqce_oracle(g, D);
        double worst = 0.0;
        for (size_t i = 0; i < u.values.size(); ++i)
            worst = std::max(worst, std::abs(u.values[i] - o.values[i]));
        REQ(worst <= 1e-9, "16^3 deviates from the oracle by %.3g", worst);
    }
    const double dt = seconds_since(t0);
    REQ(dt < 600.0, "3D criterion took %.1fs, budget is 600s", dt);
}

// ---- criterion 12 ---------------------------------------------------------

void criterion_12() {
    const qce::Box box = qce::Box::cube(2, -1.5, 1.5);
    const qce::GridFn g = qce::build(
        box, std::array<int, 2>{256, 256},
        qce::two_cones({2, 0.0, 1.0 / 3.0, qce::Combiner::min_of}));
    const qce::DirectionSet D = qce::lattice_directions(2, 5);

    {
        qce::SolveParams p;
        p.tolerance = 1e-6;
        p.max_outer_iterations = 1;
        const auto t0 = clock_type::now();
        const auto [u, rep] = qce::solve(g, D, p);
        const double dt = seconds_since(t0);
        REQ(dt < 1.0, "one 256^2 width-5 outer iteration took %.3fs, budget is 1s", dt);
    }

    qce::SolveParams p;
    p.tolerance = 1e-6;
    p.max_outer_iterations = 50;
    std::vector<double> reference;
    for (int threads : {1, 2, 8}) {
        omp_set_num_threads(threads);
        const auto [u, rep] = qce::solve(g, D, p);
        REQ(rep.converged, "%d-thread solve did not converge", threads);
        if (reference.empty())
            reference = u.values;
        else
            REQ(u.values == reference, "%d-thread result differs from the 1-thread run", threads);
    }
}

// ---- harness ----------------------------------------------------------------

struct Criterion {
    const char* name;
    void (*run)();
};

const Criterion kCriteria[] = {
    {"1D envelope equals the quadratic direct reference, 1000 sequences", criterion_1},
    {"1D envelope invariants: down-up, minorant, idempotent, comparison", criterion_2},
    {"robust 1D envelope matches the triple-relaxation oracle", criterion_3},
    {"grid solve matches the brute-force oracle in 2D and 3D", criterion_4},
    {"axis-aligned cones fix in one iteration; samples converge in 10", criterion_5},
    {"iterates decrease monotonically toward the oracle envelope", criterion_6},
    {"directional resolution: exact width-3 value, monotone, uniform sets", criterion_7},
    {"rotated cones: width-6 directions expose the width-3 gap; robust fixes it", criterion_8},
    {"robust plateau: interior margin, exact minimiser, per-line validity", criterion_9},
    {"pacman hull matches the polygon oracle; transform-invariant mask", criterion_10},
    {"3D cones: fast convergence at 64^3, oracle agreement at 16^3", criterion_11},
    {"256^2 iteration under 1s; thread count never changes results", criterion_12},
};

}  // namespace

int main() {
    int failed = 0;
    const auto t_all = clock_type::now();
    for (size_t i = 0; i < std::size(kCriteria); ++i) {
        g_failures.clear();
        const auto t0 = clock_type::now();
        try {
            kCriteria[i].run();
        } catch (const std::exception& e) {
            fail("unhandled exception: %s", e.what());
        }
        const double dt = seconds_since(t0);
        if (g_failures.empty()) {
            std::printf("[PASS] %2zu  %s (%.2fs)\n", i + 1, kCriteria[i].name, dt);
        } else {
            ++failed;
            std::printf("[FAIL] %2zu  %s (%.2fs)\n", i + 1, kCriteria[i].name, dt);
            for (const auto& msg : g_failures) std::printf("           %s\n", msg.c_str());
        }
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed (%.1fs total)\n",
                static_cast<int>(std::size(kCriteria)) - failed, std::size(kCriteria),
                seconds_since(t_all));
    return failed;
}
