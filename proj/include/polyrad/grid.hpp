#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyrad/errors.hpp"

namespace polyrad {

enum class GradingKind { uniform, geometric };

struct Grading {
    GradingKind kind = GradingKind::geometric;
    double ratio = 0.9;  // geometric only, q in (0,1)

    static Grading uniform() { return {GradingKind::uniform, 0.0}; }
    static Grading geometric(double q) { return {GradingKind::geometric, q}; }
};

/// One-dimensional graded mesh on (0, R] representing radially symmetric
/// functions on a ball in R^N, N = 2m. The origin is never a node: singular
/// profiles live there and are carried analytically (see RadialField).
struct RadialGrid {
    int dimension = 4;          // N = 2m
    double radius = 1.0;        // R, equals nodes.back()
    std::vector<double> nodes;  // strictly increasing, in (0, R]
    Grading grading;

    std::size_t size() const { return nodes.size(); }
    double inner_cutoff() const { return nodes.front(); }
    double node(std::size_t i) const { return nodes[i]; }
    int harmonic_order() const { return dimension / 2; }  // m

    /// Bracketing node pair (i, i+1) with nodes[i] <= r <= nodes[i+1].
    std::pair<std::size_t, std::size_t> bracket(double r) const {
        if (r < nodes.front() || r > nodes.back())
            throw std::invalid_argument("RadialGrid::bracket: r outside [eps, R]");
        auto it = std::upper_bound(nodes.begin(), nodes.end(), r);
        std::size_t hi = static_cast<std::size_t>(it - nodes.begin());
        if (hi == nodes.size()) hi = nodes.size() - 1;
        if (hi == 0) hi = 1;
        return {hi - 1, hi};
    }

    /// Index of the largest node <= r.
    std::size_t index_below(double r) const {
        auto it = std::upper_bound(nodes.begin(), nodes.end(), r * (1.0 + 1e-14));
        if (it == nodes.begin()) throw std::invalid_argument("RadialGrid::index_below: r below eps");
        return static_cast<std::size_t>(it - nodes.begin()) - 1;
    }
};

using GridPtr = std::shared_ptr<const RadialGrid>;

namespace detail {

inline void check_grid_invariants(const RadialGrid& g) {
    if (g.nodes.size() < 2) throw std::invalid_argument("grid: needs at least 2 nodes");
    if (g.nodes.front() <= 0.0) throw std::invalid_argument("grid: first node must be positive");
    for (std::size_t i = 1; i < g.nodes.size(); ++i)
        if (g.nodes[i] <= g.nodes[i - 1])
            throw std::invalid_argument("grid: nodes must be strictly increasing");
    if (g.grading.kind == GradingKind::geometric) {
        for (std::size_t i = 1; i + 1 < g.nodes.size(); ++i) {
            const double r0 = g.nodes[i] / g.nodes[i - 1];
            const double r1 = g.nodes[i + 1] / g.nodes[i];
            if (std::abs(r1 / r0 - 1.0) > 1e-12)
                throw std::invalid_argument("grid: geometric ratio not constant");
        }
    }
}

}  // namespace detail

/// Build a radial grid.
///
/// N must be one of {4, 6, 8}; n >= 16.
///  - uniform: n nodes at i*R/n, i = 1..n (inner cutoff R/n).
///  - geometric ratio q in (0,1): n+1 nodes at R*q^k, k = n..0 (inner cutoff
///    R*q^n). q below 10^{-1/3} is rejected: singular-fit operations need at
///    least 3 nodes per decade.
inline RadialGrid build_grid(int N, double R, int n, Grading grading) {
    if (N != 4 && N != 6 && N != 8) throw std::invalid_argument("build_grid: N must be 4, 6, or 8");
    if (R <= 0.0) throw std::invalid_argument("build_grid: R must be positive");
    if (n < 16) throw std::invalid_argument("build_grid: n < 16 gives insufficient resolution");

    RadialGrid g;
    g.dimension = N;
    g.radius = R;
    g.grading = grading;

    if (grading.kind == GradingKind::uniform) {
        g.nodes.resize(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) g.nodes[static_cast<std::size_t>(i - 1)] = R * static_cast<double>(i) / n;
        g.nodes.back() = R;
    } else {
        const double q = grading.ratio;
        if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("build_grid: geometric ratio must be in (0,1)");
        if (q < std::pow(10.0, -1.0 / 3.0))
            throw std::invalid_argument("build_grid: geometric ratio gives fewer than 3 nodes per decade");
        g.nodes.resize(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) g.nodes[static_cast<std::size_t>(n - k)] = R * std::pow(q, k);
        g.nodes.back() = R;
    }
    detail::check_grid_invariants(g);
    return g;
}

inline GridPtr make_uniform_grid(int N, double R, int n) {
    return std::make_shared<const RadialGrid>(build_grid(N, R, n, Grading::uniform()));
}

inline GridPtr make_geometric_grid(int N, double R, int n, double q) {
    return std::make_shared<const RadialGrid>(build_grid(N, R, n, Grading::geometric(q)));
}

/// Geometric grid with exactly `node_count` nodes whose inner cutoff is eps.
inline GridPtr make_geometric_grid_to_eps(int N, double R, int node_count, double eps) {
    if (node_count < 17) throw std::invalid_argument("make_geometric_grid_to_eps: need at least 17 nodes");
    if (!(eps > 0.0 && eps < R)) throw std::invalid_argument("make_geometric_grid_to_eps: need 0 < eps < R");
    const double q = std::pow(eps / R, 1.0 / static_cast<double>(node_count - 1));
    auto g = build_grid(N, R, node_count - 1, Grading::geometric(q));
    g.nodes.front() = eps;  // exact cutoff, pow round-off removed
    detail::check_grid_invariants(g);
    return std::make_shared<const RadialGrid>(std::move(g));
}

/// Prefix of `g` up to the largest node <= r. Grading descriptor is inherited.
inline GridPtr restrict_to_radius(const RadialGrid& g, double r) {
    const std::size_t last = g.index_below(r);
    if (last + 1 < 16) throw std::invalid_argument("restrict_to_radius: fewer than 16 nodes remain");
    RadialGrid out;
    out.dimension = g.dimension;
    out.grading = g.grading;
    out.nodes.assign(g.nodes.begin(), g.nodes.begin() + static_cast<std::ptrdiff_t>(last + 1));
    out.radius = out.nodes.back();
    return std::make_shared<const RadialGrid>(std::move(out));
}

}  // namespace polyrad
