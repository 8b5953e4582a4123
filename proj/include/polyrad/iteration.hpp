#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyrad/greens.hpp"
#include "polyrad/hypotheses.hpp"
#include "polyrad/nonlinearity.hpp"

namespace polyrad {

/// One instance of the charged problem (-Delta)^m u = a f(u) + alpha delta_0
/// with homogeneous Navier data.
struct ProblemSpec {
    int m = 2;
    GridPtr grid;
    Weight weight;
    Nonlinearity f;
    double alpha = 0.0;
    GrowthWitness witness;  // (gamma, C) used for the barrier

    int dimension() const { return 2 * m; }
};

/// Guaranteed-charge boundary alpha* = 1 / (K_m gamma) for the witness
/// exponent gamma, where K_m is the log-kernel mass (8 pi^2 when m = 2).
inline double alpha_star(int m, double gamma) { return 1.0 / (polyharmonic_log_mass(m) * gamma); }

/// Barrier phi: Navier solve of (-Delta)^m phi = a(r) |log r| / r on B_1
/// with zero charges. Requires R = 1 and (H2') so the rhs is integrable.
inline NavierSolution barrier_phi(const Weight& a, int m, GridPtr grid) {
    if (std::abs(grid->radius - 1.0) > 1e-12)
        throw std::invalid_argument("barrier_phi: the barrier is defined on the unit ball (R = 1)");
    RadialField rhs = RadialField::from_function(
        grid, [&](double r) { return a(r) * std::abs(std::log(r)) / r; });
    return navier_solve(m, rhs, ChargeVector(static_cast<std::size_t>(m), 0.0), grid);
}

/// The explicit supersolution u_bar = (-log r + C phi) / gamma together with
/// -Delta u_bar assembled from phi's chain stage (so its sign is inherited
/// from the discrete solve, not re-differenced).
struct Supersolution {
    RadialField u_bar;
    RadialField neg_laplacian;
    double gamma = 1.0;
    double C = 1.0;
};

inline Supersolution supersolution(double gamma, double C, const NavierSolution& phi) {
    if (gamma <= 0.0) throw std::invalid_argument("supersolution: gamma must be positive");
    if (C <= 0.0) throw std::invalid_argument("supersolution: C must be positive");
    const GridPtr grid = phi.u.grid;
    const int m = grid->harmonic_order();
    const double s = phi.u.log_scale;
    const double K = polyharmonic_log_mass(m);

    // -log r = K psi_0 - log s, so the log part rides the singular basis and
    // the constant folds into the regular samples.
    Supersolution out;
    out.gamma = gamma;
    out.C = C;
    out.u_bar = RadialField::zero(grid);
    out.u_bar.log_scale = s;
    out.u_bar.singular[0] = K / gamma;
    for (std::size_t i = 0; i < grid->size(); ++i)
        out.u_bar.regular[i] = (C * phi.u.regular[i] - std::log(s)) / gamma;
    out.u_bar.origin_value = std::nullopt;

    out.neg_laplacian = RadialField::zero(grid);
    out.neg_laplacian.log_scale = s;
    if (m >= 2) out.neg_laplacian.singular[1] = K / gamma;
    const RadialField& phi_lap = phi.neg_laplacian();
    for (std::size_t i = 0; i < grid->size(); ++i)
        out.neg_laplacian.regular[i] = C * phi_lap.regular[i] / gamma;
    out.neg_laplacian.origin_value = std::nullopt;
    return out;
}

/// Largest grid radius r such that e^{C phi} <= |log r| / gamma holds at
/// every node up to r; the ball B_r is where u_bar is a verified
/// supersolution.
inline double supersolution_radius(double gamma, double C, const NavierSolution& phi) {
    if (gamma <= 0.0) throw std::invalid_argument("supersolution_radius: gamma must be positive");
    const RadialGrid& g = *phi.u.grid;
    std::size_t last_ok = g.size();  // none yet
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double lhs = std::exp(C * phi.u.regular[i]);
        const double rhs = std::abs(std::log(g.node(i))) / gamma;
        if (lhs <= rhs)
            last_ok = i;
        else
            break;
    }
    if (last_ok == g.size())
        throw NumericalError("supersolution_radius: no node satisfies e^{C phi} <= |log r|/gamma");
    return g.node(last_ok);
}

enum class SolveStatus { converged, max_iter, diverged };

inline std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::converged: return "converged";
        case SolveStatus::max_iter: return "max_iter";
        case SolveStatus::diverged: return "diverged";
    }
    return "unknown";
}

struct MonotoneOptions {
    double tol = 1e-8;   // sup-node relative change
    int max_iterations = 500;
    bool record_iterates = false;
};

struct IterationReport {
    SolveStatus status = SolveStatus::max_iter;
    int iterations = 0;
    std::vector<double> sup_norm_history;
    double residual = 0.0;  // last sup-node relative change
    RadialField solution;
    RadialField neg_laplacian;
    bool alpha_within_guarantee = false;
    double alpha_guarantee = 0.0;
    int violation_node = -1;       // barrier violation evidence
    int violation_iteration = -1;
    bool monotone = true;          // nodewise u_n <= u_{n+1} held throughout
    bool neg_lap_monotone = true;
    std::vector<RadialField> iterates;  // filled when record_iterates
};

/// Monotone iteration of the charged problem: starting from u_0 = 0, each
/// step solves the linear Navier problem with frozen rhs a f(u_{n-1}) and
/// charge (alpha, 0, ..., 0), stopping when the sup-node relative change
/// drops below tol. Iterates above the barrier at any node are divergence
/// evidence (the report records the node), not an abort.
inline IterationReport monotone_solve(const ProblemSpec& problem, const Supersolution& barrier,
                                      MonotoneOptions opts = {}) {
    const GridPtr grid = problem.grid;
    const RadialGrid& g = *grid;
    const int m = problem.m;
    if (g.dimension != 2 * m) throw std::invalid_argument("monotone_solve: grid dimension must equal 2m");
    if (problem.alpha < 0.0) throw std::invalid_argument("monotone_solve: alpha must be nonnegative");
    if (barrier.u_bar.grid->size() != g.size())
        throw std::invalid_argument("monotone_solve: barrier lives on a different grid");

    IterationReport rep;
    rep.alpha_guarantee = alpha_star(m, barrier.gamma);
    rep.alpha_within_guarantee = problem.alpha <= rep.alpha_guarantee * (1.0 + 1e-12);

    ChargeVector charges(static_cast<std::size_t>(m), 0.0);
    charges[0] = problem.alpha;

    RadialField u = RadialField::zero(grid);
    RadialField neg_lap = RadialField::zero(grid);
    std::vector<double> a_vals(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) a_vals[i] = problem.weight(g.node(i));
    std::vector<double> barrier_vals = barrier.u_bar.values();

    for (int it = 1; it <= opts.max_iterations; ++it) {
        RadialField rhs = RadialField::zero(grid);
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double ui = u.value(i);
            rhs.regular[i] = a_vals[i] * problem.f(ui < 0.0 ? 0.0 : ui);
        }
        NavierSolution sol = navier_solve(m, rhs, charges, grid);
        rep.iterations = it;

        double change = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double now = sol.u.value(i), before = u.value(i);
            change = std::max(change, std::abs(now - before));
            scale = std::max(scale, std::abs(now));
            if (now < before) rep.monotone = false;
            if (sol.neg_laplacian().value(i) < neg_lap.value(i) && it > 1) rep.neg_lap_monotone = false;
        }
        const double rel_change = (scale > 0.0) ? change / scale : 0.0;
        rep.residual = rel_change;
        rep.sup_norm_history.push_back(sol.u.sup_norm());
        if (opts.record_iterates) rep.iterates.push_back(sol.u);

        for (std::size_t i = 0; i < g.size(); ++i) {
            if (sol.u.value(i) > barrier_vals[i]) {
                rep.status = SolveStatus::diverged;
                rep.violation_node = static_cast<int>(i);
                rep.violation_iteration = it;
                rep.solution = std::move(sol.u);
                rep.neg_laplacian = sol.levels.size() > 1 ? sol.levels[1] : RadialField::zero(grid);
                return rep;
            }
        }

        u = std::move(sol.u);
        neg_lap = (sol.levels.size() > 1) ? sol.levels[1] : RadialField::zero(grid);
        if (rel_change < opts.tol) {
            rep.status = SolveStatus::converged;
            break;
        }
        rep.status = SolveStatus::max_iter;
    }

    rep.solution = std::move(u);
    rep.neg_laplacian = std::move(neg_lap);
    return rep;
}

/// Witness-mode answer for a requested charge: an exponent gamma with
/// alpha <= alpha*(gamma) = 1/(K_m gamma), its constant C_gamma, and the
/// supersolution radius the pair certifies.
struct AlphaWitness {
    bool feasible = false;
    double gamma = 0.0;
    double C = 0.0;
    double radius = 0.0;
    std::string note;
};

inline AlphaWitness feasible_alpha_witness(const Nonlinearity& f, const NavierSolution& phi, int m,
                                           double requested_alpha) {
    AlphaWitness out;
    if (requested_alpha < 0.0) throw std::invalid_argument("feasible_alpha_witness: alpha must be nonnegative");
    if (requested_alpha == 0.0) {
        out.feasible = true;
        out.gamma = 1.0;
        out.C = f.witness_C(1.0).value_or(1.0);
        out.radius = phi.u.grid->radius;
        out.note = "alpha = 0: the zero solution works on any ball";
        return out;
    }
    const double gamma_cap = 1.0 / (polyharmonic_log_mass(m) * requested_alpha);
    // exponential kind pins gamma from below; other symbolic kinds accept any
    double gamma = gamma_cap;
    if (f.kind == Nonlinearity::Kind::exponential && f.gamma > gamma_cap) {
        out.feasible = false;
        out.note = "requested alpha exceeds 1/(K_m gamma) for the stored exponent";
        return out;
    }
    if (f.kind == Nonlinearity::Kind::exponential) gamma = f.gamma;
    const auto C = f.witness_C(gamma);
    if (!C) {
        out.feasible = false;
        out.note = "no witness constant at the required exponent (super-exponential f)";
        return out;
    }
    out.gamma = gamma;
    out.C = *C;
    try {
        out.radius = supersolution_radius(gamma, *C, phi);
        out.feasible = true;
    } catch (const NumericalError& e) {
        out.feasible = false;
        out.note = e.what();
    }
    return out;
}

/// Fixed-radius mode: bisect the largest alpha for which the monotone
/// iteration converges on the problem's own grid, to 1% relative.
inline double max_alpha_bisect(const ProblemSpec& problem_template, const Supersolution& barrier,
                               MonotoneOptions opts = {}, double rel_tol = 0.01) {
    auto converges = [&](double alpha) {
        ProblemSpec p = problem_template;
        p.alpha = alpha;
        return monotone_solve(p, barrier, opts).status == SolveStatus::converged;
    };
    double lo = 0.0;
    double hi = std::max(problem_template.alpha, alpha_star(problem_template.m, barrier.gamma));
    if (!converges(hi)) {
        // shrink until feasible
        while (hi > 1e-300 && !converges(hi)) hi *= 0.5;
        lo = hi;
        hi *= 2.0;
    } else {
        lo = hi;
        int grow = 0;
        while (grow++ < 60 && converges(hi * 2.0)) {
            hi *= 2.0;
            lo = hi;
        }
        hi *= 2.0;
    }
    while (hi - lo > rel_tol * hi) {
        const double mid = 0.5 * (lo + hi);
        (converges(mid) ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace polyrad
