#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyrad/calculus.hpp"
#include "polyrad/greens.hpp"
#include "polyrad/iteration.hpp"
#include "polyrad/nonlinearity.hpp"
#include "polyrad/stencil.hpp"

namespace polyrad {

namespace detail {

/// Eigenvalues of a symmetric 3x3 matrix by cyclic Jacobi sweeps.
inline std::array<double, 3> sym3_eigenvalues(std::array<std::array<double, 3>, 3> A) {
    for (int sweep = 0; sweep < 32; ++sweep) {
        double off = std::abs(A[0][1]) + std::abs(A[0][2]) + std::abs(A[1][2]);
        if (off < 1e-300) break;
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (A[p][q] == 0.0) continue;
                const double theta = 0.5 * (A[q][q] - A[p][p]) / A[p][q];
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                std::array<std::array<double, 3>, 3> R{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
                R[p][p] = c;
                R[q][q] = c;
                R[p][q] = s;
                R[q][p] = -s;
                std::array<std::array<double, 3>, 3> B{};
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) {
                        double v = 0.0;
                        for (int k = 0; k < 3; ++k)
                            for (int l = 0; l < 3; ++l) v += R[k][i] * A[k][l] * R[l][j];
                        B[i][j] = v;
                    }
                A = B;
            }
        }
    }
    return {A[0][0], A[1][1], A[2][2]};
}

inline std::array<double, 3> solve3(std::array<std::array<double, 3>, 3> M, std::array<double, 3> b) {
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
        std::swap(M[col], M[piv]);
        std::swap(b[col], b[piv]);
        if (M[col][col] == 0.0) throw NumericalError("estimate_charges: singular normal equations");
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = M[r][col] / M[col][col];
            for (int c = col; c < 3; ++c) M[r][c] -= f * M[col][c];
            b[r] -= f * b[col];
        }
    }
    return {b[0] / M[0][0], b[1] / M[1][1], b[2] / M[2][2]};
}

}  // namespace detail

/// Coefficients of the near-origin decomposition u ~ alpha Phi + beta Gamma + h,
/// with h truncated at its constant term over the fit window.
struct AsymptoticFit {
    double alpha_hat = 0.0;
    double beta_hat = 0.0;
    double constant_hat = 0.0;
    double window_lo = 0.0, window_hi = 0.0;
    double residual = 0.0;   // RMS over the window, field units
    double condition = 0.0;  // of the scaled normal equations
    std::size_t nodes_used = 0;
};

/// Least-squares fit of nodal values against {Phi, Gamma, 1} over the window.
/// Columns are max-abs scaled before forming the normal equations; a scaled
/// condition number at or above 1e10 is treated as rank deficiency.
inline AsymptoticFit estimate_charges(const RadialField& u, double window_lo, double window_hi) {
    const RadialGrid& g = *u.grid;
    if (!(window_lo < window_hi)) throw std::invalid_argument("estimate_charges: empty window");
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.node(i) >= window_lo && g.node(i) <= window_hi) idx.push_back(i);
    if (idx.size() < 8) throw std::invalid_argument("estimate_charges: fewer than 8 nodes in window");

    const int m = g.harmonic_order();
    auto basis = [&](int j, double r) {
        if (j == 0) return fundamental_biharmonic(g.dimension, r);
        if (j == 1) return fundamental_laplace(g.dimension, r);
        return 1.0;
    };

    std::array<double, 3> scale{0.0, 0.0, 0.0};
    for (std::size_t i : idx)
        for (int j = 0; j < 3; ++j) scale[static_cast<std::size_t>(j)] = std::max(scale[static_cast<std::size_t>(j)], std::abs(basis(j, g.node(i))));
    for (double& s : scale)
        if (s == 0.0) s = 1.0;

    std::array<std::array<double, 3>, 3> G{};
    std::array<double, 3> rhs{0.0, 0.0, 0.0};
    for (std::size_t i : idx) {
        const double r = g.node(i), y = u.value(i);
        std::array<double, 3> row{basis(0, r) / scale[0], basis(1, r) / scale[1], basis(2, r) / scale[2]};
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) G[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += row[static_cast<std::size_t>(a)] * row[static_cast<std::size_t>(b)];
            rhs[static_cast<std::size_t>(a)] += row[static_cast<std::size_t>(a)] * y;
        }
    }

    const auto ev = detail::sym3_eigenvalues(G);
    double emax = 0.0, emin = std::numeric_limits<double>::infinity();
    for (double e : ev) {
        emax = std::max(emax, std::abs(e));
        emin = std::min(emin, std::abs(e));
    }
    const double cond = (emin > 0.0) ? emax / emin : std::numeric_limits<double>::infinity();
    if (!(cond < 1e10))
        throw NumericalError("estimate_charges: rank-deficient fit (scaled condition " + std::to_string(cond) + ")");

    const auto c = detail::solve3(G, rhs);
    AsymptoticFit fit;
    fit.alpha_hat = c[0] / scale[0];
    fit.beta_hat = c[1] / scale[1];
    fit.constant_hat = c[2] / scale[2];
    fit.window_lo = window_lo;
    fit.window_hi = window_hi;
    fit.condition = cond;
    fit.nodes_used = idx.size();
    double ss = 0.0;
    for (std::size_t i : idx) {
        const double r = g.node(i);
        const double model = fit.alpha_hat * basis(0, r) + fit.beta_hat * basis(1, r) + fit.constant_hat;
        const double d = u.value(i) - model;
        ss += d * d;
    }
    fit.residual = std::sqrt(ss / static_cast<double>(idx.size()));
    (void)m;
    return fit;
}

/// Default inner-decade window [eps, 10 eps].
inline AsymptoticFit estimate_charges(const RadialField& u) {
    const double eps = u.grid->inner_cutoff();
    return estimate_charges(u, eps, 10.0 * eps);
}

/// Discrete flux functional recovering the delta_0 charge: the mass identity
/// gives -|S^{N-1}| r^{N-1} d/dr[(-Delta)^{m-1} u](r) -> alpha_0 as r -> 0.
/// Everything is differenced from nodal totals (the singular part is folded
/// in first), so the recovered charge genuinely tests the fundamental-solution
/// normalization. Evaluated at the three smallest centered-stencil nodes.
struct FluxEstimate {
    double charge = 0.0;
    std::array<double, 3> per_node{};
    std::array<double, 3> radii{};
};

inline FluxEstimate flux_charge_estimate(const RadialField& u) {
    const RadialGrid& g = *u.grid;
    const int m = g.harmonic_order();
    RadialField z = u.flattened();
    if (m > 1) z = polyharmonic_apply(z, m - 1);
    const double area = sphere_surface(g.dimension);

    FluxEstimate out;
    const std::size_t base = static_cast<std::size_t>(m);  // clear of one-sided edge effects
    if (g.size() < base + 4) throw std::invalid_argument("flux_charge_estimate: grid too small");
    for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t i = base + k;
        const auto d = detail::derivatives3(g.node(i), &g.nodes[i - 1], &z.regular[i - 1]);
        const double flux = -area * std::pow(g.node(i), g.dimension - 1) * d.d1;
        out.per_node[k] = flux;
        out.radii[k] = g.node(i);
        out.charge += flux / 3.0;
    }
    return out;
}

/// Outcome of one of the classification checks (Lemma-style divergence
/// probes). `applicable` is false when the growth precondition fails.
struct CheckOutcome {
    bool applicable = false;
    bool diverged = false;
    double value = 0.0;
    double gamma_used = 0.0;
    std::string note;
};

/// Superquadratic growth forces the Delta delta_0 charge to vanish: probe
/// the integrability of a(r) f(beta / (2 pi^2 r^2)) with shrinking cutoff.
/// Divergence reproduces the contradiction with a f(u) in L^1.
inline CheckOutcome beta_vanishing_check(const Nonlinearity& f, const Weight& a, double beta,
                                         const RadialGrid& grid) {
    CheckOutcome out;
    if (beta < 0.0) throw std::invalid_argument("beta_vanishing_check: beta must be nonnegative");
    const auto growth = classify_growth(f);
    if (!growth.superquadratic) {
        out.note = "inapplicable: f is not superquadratic (lim f(t)/t^2 = 0)";
        return out;
    }
    if (beta == 0.0) {
        out.applicable = true;
        out.note = "beta = 0: zero integrand, nothing to diverge";
        return out;
    }
    out.applicable = true;
    const double c = beta / (2.0 * std::numbers::pi * std::numbers::pi);
    auto res = ball_integral_fn(grid, [&](double r) { return a(r) * f(c / (r * r)); });
    out.value = res.value;
    out.diverged = res.diverged;
    out.note = out.diverged ? "integral grows without bound as the cutoff shrinks"
                            : "integral stable under cutoff refinement";
    return out;
}

/// Super-exponential growth forces the delta_0 charge to vanish: with
/// gamma = 64 pi^2 / alpha the lower bound u >= -(alpha/16 pi^2) log|x|
/// turns f(u) into an r^{-4} profile, so a f(u) cannot be integrable.
/// A sensitivity variant with the unhalved bound alpha/(8 pi^2) is also run.
struct RemovabilityOutcome : CheckOutcome {
    bool diverged_full_bound = false;
};

inline RemovabilityOutcome alpha_removability_check(const Nonlinearity& f, const Weight& a, double alpha,
                                                    const RadialGrid& grid) {
    RemovabilityOutcome out;
    if (alpha < 0.0) throw std::invalid_argument("alpha_removability_check: alpha must be nonnegative");
    const auto growth = classify_growth(f);
    if (!growth.super_exponential) {
        out.note = "inapplicable: f is sub-exponential";
        return out;
    }
    if (alpha == 0.0) {
        out.note = "inapplicable: alpha = 0 gives no singular lower bound";
        return out;
    }
    out.applicable = true;
    const double pi2 = std::numbers::pi * std::numbers::pi;
    out.gamma_used = 64.0 * pi2 / alpha;
    const double coeff_half = alpha / (16.0 * pi2);
    const double coeff_full = alpha / (8.0 * pi2);
    auto probe = [&](double coeff) {
        return ball_integral_fn(grid, [&](double r) {
            // a(r) e^{gamma * coeff * |log r|}; exponent stays modest on the grid
            return a(r) * std::exp(out.gamma_used * coeff * std::abs(std::log(r)));
        });
    };
    const auto res = probe(coeff_half);
    out.value = res.value;
    out.diverged = res.diverged;
    out.diverged_full_bound = probe(coeff_full).diverged;
    out.note = out.diverged ? "a f(u) escapes L^1: the charge must vanish"
                            : "no divergence detected";
    return out;
}

/// Exponential-integrability probe: value of |S^{N-1}| int e^{delta |h| / l1}
/// r^{N-1} dr and the admissibility of delta against the dimensional
/// threshold 2m gamma_m (32 pi^2 for m = 2). Computed in log space when the
/// exponent is large.
struct ExpIntegrabilityResult {
    double value = 0.0;      // +inf when overflowed
    double log_value = 0.0;  // log of the integral, always finite
    bool admissible = false;
    bool overflowed = false;
    double threshold = 0.0;
};

inline ExpIntegrabilityResult exp_integrability_check(const RadialField& h, double l1_norm, double delta,
                                                      int m) {
    if (l1_norm <= 0.0) throw std::invalid_argument("exp_integrability_check: l1_norm must be positive");
    if (delta < 0.0) throw std::invalid_argument("exp_integrability_check: delta must be nonnegative");
    const RadialGrid& g = *h.grid;
    ExpIntegrabilityResult out;
    out.threshold = 2.0 * m * martinazzi_gamma(m);
    out.admissible = delta < out.threshold;

    std::vector<double> e(g.size());
    double gmax = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        e[i] = delta * std::abs(h.value(i)) / l1_norm;
        gmax = std::max(gmax, e[i]);
    }
    const double cap = 700.0;
    const double shift = (gmax > cap) ? gmax - cap : 0.0;
    out.overflowed = shift > 0.0;
    std::vector<double> vals(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) vals[i] = std::exp(e[i] - shift);
    const auto res = ball_integral_values(g, vals);
    out.log_value = std::log(res.value) + shift;
    out.value = out.overflowed ? std::numeric_limits<double>::infinity() : res.value;
    return out;
}

/// Regularity bootstrap report for an uncharged solution.
struct BootstrapExpEntry {
    double l = 0.0;
    double value = 0.0;
    bool finite = false;
};

struct BootstrapReport {
    bool applicable = false;
    std::vector<BootstrapExpEntry> exp_integrals;  // l in {1, 2 gamma, 4 gamma}
    double holder_r = 0.0, holder_p = 0.0;
    double lhs = 0.0;            // int (a f(u))^r
    double rhs_product = 0.0;    // Hoelder bound C^r (int a^{pr})^{1/p} (int e^{p' gamma r u})^{1/p'}
    bool holder_holds = false;
    double sup_norm = 0.0;
    std::string note;
};

inline BootstrapReport regularity_bootstrap_check(const RadialField& u, const Nonlinearity& f,
                                                  const Weight& a) {
    BootstrapReport rep;
    const auto growth = classify_growth(f);
    if (!growth.sub_exponential || !growth.witness) {
        rep.note = "inapplicable: f has no sub-exponential witness";
        return rep;
    }
    rep.applicable = true;
    const RadialGrid& g = *u.grid;
    const double gamma = growth.witness->gamma, C = growth.witness->C;
    rep.sup_norm = u.sup_norm();

    std::vector<double> u_abs(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) u_abs[i] = std::abs(u.value(i));
    for (double l : {1.0, 2.0 * gamma, 4.0 * gamma}) {
        BootstrapExpEntry entry;
        entry.l = l;
        std::vector<double> vals(g.size());
        bool capped = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double e = l * u_abs[i];
            capped = capped || e > 700.0;
            vals[i] = std::exp(std::min(e, 700.0));
        }
        auto res = ball_integral_values(g, vals);
        entry.value = res.value;
        entry.finite = !res.diverged && !capped && std::isfinite(res.value);
        rep.exp_integrals.push_back(entry);
    }

    // Hoelder split with p, r > 1 close to 1 and p r <= k
    const double k = a.integrability_exponent;
    const double pr = std::min(k, 1.21);
    const double p = std::sqrt(pr), r_exp = std::sqrt(pr);
    const double p_conj = p / (p - 1.0);
    rep.holder_p = p;
    rep.holder_r = r_exp;
    std::vector<double> lhs_v(g.size()), aw(g.size()), ew(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double ar = a(g.node(i));
        lhs_v[i] = std::pow(ar * f(u_abs[i]), r_exp);
        aw[i] = std::pow(ar, p * r_exp);
        ew[i] = std::exp(std::min(p_conj * gamma * r_exp * u_abs[i], 700.0));
    }
    rep.lhs = ball_integral_values(g, lhs_v).value;
    const double int_a = ball_integral_values(g, aw).value;
    const double int_e = ball_integral_values(g, ew).value;
    rep.rhs_product = std::pow(C, r_exp) * std::pow(int_a, 1.0 / p) * std::pow(int_e, 1.0 / p_conj);
    rep.holder_holds = rep.lhs <= rep.rhs_product * (1.0 + 1e-9);
    return rep;
}

/// Randomized maximum-principle trials: nonnegative smooth radial rhs,
/// zero charges, assert u >= 0 and -Delta u >= 0 at every node.
struct PropertyFailure {
    int trial = -1;
    std::uint64_t seed = 0;
    std::size_t node = 0;
    double value = 0.0;
    std::string what;
};

struct PropertyReport {
    int trials = 0;
    std::vector<PropertyFailure> failures;
    bool all_pass() const { return failures.empty(); }
};

inline PropertyReport comparison_property_check(int trials, GridPtr grid, std::uint64_t seed) {
    PropertyReport rep;
    rep.trials = trials;
    const RadialGrid& g = *grid;
    const int m = g.harmonic_order();
    const double R = g.radius;

    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
        std::mt19937_64 rng(trial_seed);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const double c0 = unif(rng), c1 = unif(rng), c2 = unif(rng), c3 = unif(rng), c4 = unif(rng);
        RadialField rhs = RadialField::from_function(grid, [&](double r) {
            const double x = r / R;
            return c0 + c1 * x * x + c2 * (1.0 - x * x) + c3 * std::exp(-4.0 * x * x) + c4 * x * x * x * x;
        });
        const auto sol = navier_solve(m, rhs, ChargeVector(static_cast<std::size_t>(m), 0.0), grid);
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (sol.u.value(i) < 0.0) {
                rep.failures.push_back({t, trial_seed, i, sol.u.value(i), "u < 0"});
                break;
            }
            if (m > 1 && sol.levels[1].value(i) < 0.0) {
                rep.failures.push_back({t, trial_seed, i, sol.levels[1].value(i), "-Delta u < 0"});
                break;
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Closed-form verification target: w = (-4 log r)^{1/mu} in R^4
// ---------------------------------------------------------------------------

struct LogExampleResult {
    double b1 = 0.0, b2 = 0.0, b3 = 0.0;
    double max_rel_residual = 0.0;
    std::size_t trimmed_per_end = 2;
};

namespace detail {

/// Exact radial derivatives of w = L^nu, L = -4 log r, collected on the
/// monomials P_k = L^{nu-k}. Long double throughout: the discrete operator
/// this feeds is verified down to truncation level.
template <typename Real>
struct LogProfileDerivs {
    Real w, w1, w2, w3, w4;
};

template <typename Real>
inline LogProfileDerivs<Real> log_profile_derivatives(Real nu, Real r) {
    const Real L = -4 * std::log(r);
    auto P = [&](int k) { return std::pow(L, nu - Real(k)); };
    LogProfileDerivs<Real> d;
    const Real n1 = nu - 1, n2 = nu - 2, n3 = nu - 3;
    d.w = P(0);
    d.w1 = -4 * nu * P(1) / r;
    d.w2 = 4 * nu * (4 * n1 * P(2) + P(1)) / (r * r);
    d.w3 = -8 * nu * (8 * n1 * n2 * P(3) + 6 * n1 * P(2) + P(1)) / (r * r * r);
    d.w4 = 8 * nu * (32 * n1 * n2 * n3 * P(4) + 48 * n1 * n2 * P(3) + 22 * n1 * P(2) + 3 * P(1)) /
           (r * r * r * r);
    return d;
}

/// Radial biharmonic in R^4 from exact derivatives:
/// Delta^2 w = w'''' + (6/r) w''' + (3/r^2) w'' - (3/r^3) w'.
template <typename Real>
inline Real biharmonic_from_derivs(const LogProfileDerivs<Real>& d, Real r) {
    return d.w4 + 6 * d.w3 / r + 3 * d.w2 / (r * r) - 3 * d.w1 / (r * r * r);
}

/// Discrete (-Delta)^m on a graded mesh in the log coordinate xi = log r,
/// with the exponential scale factors carried analytically through the
/// composition:
///   (-Delta)^m u = (-1)^m e^{-2m xi} prod_{j=0}^{m-1} (D - 2j)(D + N-2-2j) u.
/// Each stage differences an O(1)-smooth field with centered 3-point
/// stencils; extended precision keeps the composition truncation-dominated.
inline std::vector<long double> graded_polyharmonic(const std::vector<long double>& xi,
                                                    std::vector<long double> cur, int N, int m) {
    const std::size_t n = xi.size();
    if (n < 3) throw std::invalid_argument("graded_polyharmonic: need at least 3 nodes");
    for (int j = 0; j < m; ++j) {
        std::vector<long double> nxt(n);
        const long double A = 2.0L * j;
        const long double B = -static_cast<long double>(N - 2 - 2 * j);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j0 = (i == 0) ? 0 : (i == n - 1 ? n - 3 : i - 1);
            const auto d = derivatives3(xi[i], &xi[j0], &cur[j0]);
            nxt[i] = d.d2 - (A + B) * d.d1 + A * B * cur[i];
        }
        cur = std::move(nxt);
    }
    const long double sign = (m % 2 == 0) ? 1.0L : -1.0L;
    for (std::size_t i = 0; i < n; ++i) cur[i] *= sign * std::exp(-2.0L * m * xi[i]);
    return cur;
}

}  // namespace detail

/// Verify the closed-form identity Delta^2 w = b1 e^{w^mu} w^{1-4mu}
/// (b2 w^{2mu} - b3) for w = (-4 log r)^{1/mu} in R^4.
///
/// The constants are not hard-coded: exact radial differentiation of the
/// profile is evaluated at probe radii and Delta^2 w r^4 L^{4-nu}, a linear
/// polynomial in L^2, is collected to produce (b1, b2, b3) with the b2 = 1
/// normalization; a third probe cross-checks the collection. The residual
/// compares the discrete biharmonic (graded-coordinate composition) against
/// the closed form on interior nodes, two per end trimmed where the
/// composition leans on one-sided stencils.
inline LogExampleResult verify_log_example(double mu, const RadialGrid& grid) {
    if (!(mu > 1.0)) throw std::invalid_argument("verify_log_example: mu > 1 required");
    if (grid.dimension != 4) throw std::invalid_argument("verify_log_example: the identity lives in R^4");
    if (grid.radius > std::exp(-0.25) * (1.0 + 1e-12))
        throw std::invalid_argument("verify_log_example: grid must not extend past e^{-1/4}");
    const std::size_t n = grid.size();
    if (n < 8) throw std::invalid_argument("verify_log_example: grid too small");

    using Real = long double;
    const Real nu = 1.0L / static_cast<Real>(mu);

    // collect constants from the exact-derivative oracle
    const Real eps = static_cast<Real>(grid.inner_cutoff());
    const Real Rr = static_cast<Real>(grid.radius);
    const std::array<Real, 3> probes{0.9L * Rr, std::sqrt(eps * Rr), 1.2L * eps};
    std::array<Real, 3> Y{}, L2{};
    for (std::size_t i = 0; i < 3; ++i) {
        const Real r = probes[i];
        const Real L = -4 * std::log(r);
        const auto d = detail::log_profile_derivatives(nu, r);
        Y[i] = detail::biharmonic_from_derivs(d, r) * std::pow(r, Real(4)) * std::pow(L, Real(4) - nu);
        L2[i] = L * L;
    }
    const Real slope = (Y[1] - Y[0]) / (L2[1] - L2[0]);
    const Real intercept = Y[0] - slope * L2[0];
    const Real check = slope * L2[2] + intercept;
    if (std::abs(static_cast<double>((check - Y[2]) / Y[2])) > 1e-8)
        throw NumericalError("verify_log_example: collected constants fail the cross-check probe");

    LogExampleResult out;
    out.b1 = static_cast<double>(slope);  // with b2 = 1 normalization
    out.b2 = 1.0;
    out.b3 = static_cast<double>(-intercept / slope);

    // discrete operator vs closed form
    std::vector<Real> xi(n), w(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Real r = static_cast<Real>(grid.node(i));
        xi[i] = std::log(r);
        w[i] = std::pow(-4 * xi[i], nu);
    }
    const auto disc = detail::graded_polyharmonic(xi, w, 4, 2);

    const std::size_t trim = out.trimmed_per_end = 2;
    double worst = 0.0;
    for (std::size_t i = trim; i + trim < n; ++i) {
        const Real L = -4 * xi[i];
        const Real closed = slope * std::exp(L) * std::pow(L, nu - 4) * (L * L + intercept / slope);
        const double rel = std::abs(static_cast<double>((disc[i] - closed) / closed));
        worst = std::max(worst, rel);
    }
    out.max_rel_residual = worst;
    return out;
}

}  // namespace polyrad
