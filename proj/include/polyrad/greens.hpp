#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "polyrad/calculus.hpp"
#include "polyrad/errors.hpp"
#include "polyrad/field.hpp"
#include "polyrad/fundamental.hpp"
#include "polyrad/tridiagonal.hpp"

namespace polyrad {

namespace detail {

/// Mass of the rhs on the inner disk [0, eps], extrapolating the first two
/// nodal values as a power law g ~ g0 (r/r0)^s. The extrapolation matters:
/// for integrands near the integrability limit this mass, multiplied by the
/// resistance 1/(2 eps^2) of the mesh, enters the solution at order one.
inline double inner_disk_mass(const RadialGrid& g, const std::vector<double>& rhs) {
    const double r0 = g.node(0), g0 = rhs[0], g1 = rhs[1];
    const int N = g.dimension;
    if (g0 > 0.0 && g1 > 0.0) {
        double s = std::log(g1 / g0) / std::log(g.node(1) / r0);
        s = std::min(std::max(s, -static_cast<double>(N) + 0.05), 4.0);
        return g0 * std::pow(r0, N) / (N + s);
    }
    return g0 * std::pow(r0, N) / N;  // constant extrapolation
}

}  // namespace detail

/// Solve -Delta v = rhs on the ball with v(R) = boundary_value, radial
/// symmetry (zero flux) at the origin, for a regular rhs given by its total
/// nodal values. Finite-volume form: the flux r^{N-1} v' is balanced against
/// exact r^{N-1}-moments of the linearly interpolated rhs on each control
/// volume, giving a tridiagonal M-matrix (solutions of nonnegative data stay
/// nonnegative in floating point, which the monotone iteration relies on).
inline RadialField poisson_solve(const RadialField& rhs, double boundary_value, GridPtr grid) {
    const RadialGrid& g = *grid;
    const std::size_t n = g.size();
    if (n < 3) throw std::invalid_argument("poisson_solve: grid has fewer than 3 nodes");

    std::vector<double> gv = rhs.values();
    for (double v : gv)
        if (!std::isfinite(v)) throw NumericalError("poisson_solve: non-finite rhs value");

    const int N = g.dimension;
    std::vector<double> mid(n - 1), trans(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        mid[i] = 0.5 * (g.node(i) + g.node(i + 1));
        trans[i] = std::pow(mid[i], N - 1) / (g.node(i + 1) - g.node(i));
    }

    auto interp = [&](double x, std::size_t i) {
        const double w = (x - g.node(i)) / (g.node(i + 1) - g.node(i));
        return gv[i] + w * (gv[i + 1] - gv[i]);
    };

    // control-volume masses: cell 0 is [0, mid_0], cell i is [mid_{i-1}, mid_i]
    std::vector<double> mass(n - 1, 0.0);
    mass[0] = detail::inner_disk_mass(g, gv) + detail::segment_moment(g.node(0), mid[0], gv[0], interp(mid[0], 0), N);
    for (std::size_t i = 1; i + 1 < n; ++i)
        mass[i] = detail::segment_moment(mid[i - 1], g.node(i), interp(mid[i - 1], i - 1), gv[i], N) +
                  detail::segment_moment(g.node(i), mid[i], gv[i], interp(mid[i], i), N);

    std::vector<double> lo(n - 1, 0.0), di(n - 1, 0.0), up(n - 1, 0.0), b(mass);
    di[0] = trans[0];
    up[0] = -trans[0];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        lo[i] = -trans[i - 1];
        di[i] = trans[i - 1] + trans[i];
        up[i] = -trans[i];
    }
    b[n - 2] -= up[n - 2] * boundary_value;
    up[n - 2] = 0.0;

    auto x = solve_tridiagonal(lo, di, up, b);

    RadialField out = RadialField::zero(grid);
    for (std::size_t i = 0; i + 1 < n; ++i) out.regular[i] = x[i];
    out.regular[n - 1] = boundary_value;
    out.origin_value = out.regular[0];  // flat extrapolation; zero flux at 0
    return out;
}

/// Result of a Navier solve: the solution u and the full chain of levels,
/// levels[k] = (-Delta)^k u for k = 0..m-1. Level fields carry their singular
/// parts analytically; their regular parts are exactly the nested Poisson
/// stages the solver used, so monotonicity and sign checks on -Delta u are
/// free of extra differencing error.
struct NavierSolution {
    RadialField u;
    std::vector<RadialField> levels;

    const RadialField& level(std::size_t k) const { return levels.at(k); }
    const RadialField& neg_laplacian() const { return levels.at(1); }
};

/// Solve (-Delta)^m u = rhs + sum_i alpha_i (-Delta)^i delta_0 with
/// homogeneous Navier data u = Delta u = ... = Delta^{m-1} u = 0 at r = R.
///
/// The solution splits as u = sum_i alpha_i psi_i + w. Because the singular
/// basis is the exact chain -Delta psi_i = psi_{i+1}, the regular remainder w
/// solves the m-fold nested Poisson chain
///     -Delta w_{m-1} = rhs, ..., -Delta w_0 = w_1,  w = w_0,
/// with stage boundary values canceling the singular traces at R:
///     w_k(R) = -sum_{i <= m-1-k} alpha_i psi_{i+k}(R).
/// The discrete system never sees a Dirac charge.
inline NavierSolution navier_solve(int m, const RadialField& rhs, const ChargeVector& charges, GridPtr grid) {
    const RadialGrid& g = *grid;
    if (m < 1) throw std::invalid_argument("navier_solve: m >= 1 required");
    if (g.dimension != 2 * m) throw std::invalid_argument("navier_solve: grid dimension must equal 2m");
    if (charges.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("navier_solve: charge vector length must equal m");

    {
        const auto check = ball_integral_values(g, rhs.values());
        if (check.diverged) throw NumericalError("navier_solve: rhs fails the integrability slope test");
    }

    const double s = rhs.log_scale;
    auto boundary_value = [&](int k) {
        double bc = 0.0;
        for (int i = 0; i + k <= m - 1; ++i)
            if (charges[static_cast<std::size_t>(i)] != 0.0)
                bc -= charges[static_cast<std::size_t>(i)] * singular_basis_value(m, i + k, g.radius, s);
        return bc;
    };

    std::vector<RadialField> stages;  // regular parts w_{m-1}, ..., w_0
    stages.reserve(static_cast<std::size_t>(m));
    const RadialField* cur_rhs = &rhs;
    for (int k = m - 1; k >= 0; --k) {
        stages.push_back(poisson_solve(*cur_rhs, boundary_value(k), grid));
        cur_rhs = &stages.back();
    }

    NavierSolution out;
    out.levels.resize(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        RadialField level = stages[static_cast<std::size_t>(m - 1 - k)];
        level.log_scale = s;
        for (int i = 0; i + k <= m - 1; ++i) level.singular[static_cast<std::size_t>(i + k)] = charges[static_cast<std::size_t>(i)];
        if (level.singular.empty() || !level.has_singular())
            level.origin_value = level.regular[0];
        else
            level.origin_value = std::nullopt;
        out.levels[static_cast<std::size_t>(k)] = std::move(level);
    }
    out.u = out.levels[0];
    return out;
}

}  // namespace polyrad
