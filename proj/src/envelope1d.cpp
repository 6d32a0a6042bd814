#include "qce/envelope1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qce {

namespace {

void check_seq(const Seq& g, const char* op) {
    if (g.values.empty())
        throw std::runtime_error(std::string(op) + ": empty sequence");
    if (!(std::isfinite(g.step) && g.step > 0.0))
        throw std::runtime_error(std::string(op) + ": step must be finite and positive");
    for (double v : g.values)
        if (!std::isfinite(v))
            throw std::runtime_error(std::string(op) + ": non-finite value in input");
}

// One full relaxation round of the pairwise robust bound, b = B(v).
// For each interior k the bound over pairs j < k < l splits by the chord
// slope s = (v[l]-v[j]) / ((l-j)h):
//   s < -eps  -> v[j] - eps*(k-j)h      (descent from the left anchor)
//   |s| <= eps -> chord interpolated at k (convexity across the pair)
//   s > +eps  -> v[l] - eps*(l-k)h      (descent from the right anchor)
// Scanning j with the suffix-minimum slope over l, and l with the
// prefix-maximum slope over j, realises the minimum over all pairs in
// O(N^2) without enumerating triples: the candidate from an extreme slope
// is always some pair's exact bound, and the binding pair is reached from
// at least one of its two ends.
void robust_round(std::span<const double> v, double eps, double h, std::span<double> b) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(v.size());
    std::copy(v.begin(), v.end(), b.begin());
    for (std::ptrdiff_t j = 0; j + 2 < n; ++j) {
        double smin = std::numeric_limits<double>::infinity();
        for (std::ptrdiff_t k = n - 2; k > j; --k) {
            smin = std::min(smin, (v[k + 1] - v[j]) / (static_cast<double>(k + 1 - j) * h));
            if (smin <= eps) {
                const double cand = v[j] + static_cast<double>(k - j) * h * std::max(-eps, smin);
                b[k] = std::min(b[k], cand);
            }
        }
    }
    for (std::ptrdiff_t l = n - 1; l >= 2; --l) {
        double smax = -std::numeric_limits<double>::infinity();
        for (std::ptrdiff_t k = 1; k < l; ++k) {
            smax = std::max(smax, (v[l] - v[k - 1]) / (static_cast<double>(l - k + 1) * h));
            if (smax >= -eps) {
                const double cand = v[l] - static_cast<double>(l - k) * h * std::min(eps, smax);
                b[k] = std::min(b[k], cand);
            }
        }
    }
    // Float guard: the envelope never dips below the line minimum.
    double m = v[0];
    for (std::ptrdiff_t i = 1; i < n; ++i) m = std::min(m, v[i]);
    for (std::ptrdiff_t i = 0; i < n; ++i) b[i] = std::max(b[i], m);
}

}  // namespace

Seq sweep_decreasing(const Seq& g) {
    check_seq(g, "sweep_decreasing");
    Seq out = g;
    for (size_t i = 1; i < out.values.size(); ++i)
        out.values[i] = std::min(out.values[i - 1], out.values[i]);
    return out;
}

Seq sweep_increasing(const Seq& g) {
    check_seq(g, "sweep_increasing");
    Seq out = g;
    for (size_t i = out.values.size() - 1; i-- > 0;)
        out.values[i] = std::min(out.values[i + 1], out.values[i]);
    return out;
}

Seq qce_1d(const Seq& g) {
    check_seq(g, "qce_1d");
    Seq out = g;
    qce_1d_inplace(out.values);
    return out;
}

void qce_1d_inplace(std::span<double> v) {
    thread_local std::vector<double> fwd;
    const size_t n = v.size();
    fwd.resize(n);
    fwd[0] = v[0];
    for (size_t i = 1; i < n; ++i) fwd[i] = std::min(fwd[i - 1], v[i]);
    double bwd = v[n - 1];
    for (size_t i = n; i-- > 0;) {
        bwd = std::min(bwd, v[i]);
        v[i] = std::max(fwd[i], bwd);
    }
}

Seq robust_qce_1d(const Seq& g, const RobustParams& p) {
    check_seq(g, "robust_qce_1d");
    if (!(std::isfinite(p.epsilon) && p.epsilon >= 0.0))
        throw std::runtime_error("robust_qce_1d: epsilon must be finite and >= 0");
    Seq out = g;
    robust_qce_1d_inplace(out.values, p.epsilon, g.step);
    return out;
}

void robust_qce_1d_inplace(std::span<double> v, double epsilon, double h) {
    if (epsilon == 0.0) {
        qce_1d_inplace(v);
        return;
    }
    const size_t n = v.size();
    if (n < 3) return;
    thread_local std::vector<double> next;
    next.resize(n);
    // Each round is a monotone contraction bounded below by min(v); values
    // strictly decrease until the fixed point, so this terminates. The cap
    // is a defensive bound only.
    for (int round = 0; round < 1000; ++round) {
        robust_round(v, epsilon, h, next);
        bool changed = false;
        for (size_t i = 0; i < n; ++i) {
            if (next[i] != v[i]) {
                changed = true;
                v[i] = next[i];
            }
        }
        if (!changed) return;
    }
}

std::vector<int> classify_a(const Seq& u, double tol) {
    check_seq(u, "classify_a");
    if (!(tol >= 0.0)) throw std::runtime_error("classify_a: tol must be >= 0");
    const auto& v = u.values;
    const double m = *std::min_element(v.begin(), v.end());
    size_t first = 0, last = v.size() - 1;
    while (v[first] > m + tol) ++first;
    while (v[last] > m + tol) --last;
    std::vector<int> label(v.size(), 0);
    for (size_t i = 0; i < first; ++i) label[i] = -1;
    for (size_t i = last + 1; i < v.size(); ++i) label[i] = 1;
    return label;
}

bool is_down_up(const Seq& u, double tol) {
    check_seq(u, "is_down_up");
    if (!(tol >= 0.0)) throw std::runtime_error("is_down_up: tol must be >= 0");
    const auto& v = u.values;
    const double m = *std::min_element(v.begin(), v.end());
    size_t pivot = 0;
    while (v[pivot] != m) ++pivot;
    for (size_t i = 0; i + 1 <= pivot; ++i)
        if (v[i + 1] > v[i] + tol) return false;
    for (size_t i = pivot; i + 1 < v.size(); ++i)
        if (v[i + 1] < v[i] - tol) return false;
    return true;
}

bool is_robust_qc_1d(const Seq& u, double epsilon, double tol) {
    check_seq(u, "is_robust_qc_1d");
    if (!(std::isfinite(epsilon) && epsilon >= 0.0))
        throw std::runtime_error("is_robust_qc_1d: epsilon must be finite and >= 0");
    if (!(tol >= 0.0)) throw std::runtime_error("is_robust_qc_1d: tol must be >= 0");
    const auto& v = u.values;
    const double h = u.step;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(v.size());
    for (std::ptrdiff_t j = 0; j < n; ++j)
        for (std::ptrdiff_t l = j + 2; l < n; ++l) {
            const double s = (v[j] - v[l]) / (static_cast<double>(l - j) * h);
            const double pt = std::clamp(s, -epsilon, epsilon);
            for (std::ptrdiff_t k = j + 1; k < l; ++k) {
                const double bound = std::max(v[j] - pt * static_cast<double>(k - j) * h,
                                              v[l] + pt * static_cast<double>(l - k) * h);
                if (v[k] > bound + tol) return false;
            }
        }
    return true;
}

}  // namespace qce
