#pragma once

#include <cmath>
#include <stdexcept>

#include "polyrad/constants.hpp"
#include "polyrad/errors.hpp"

namespace polyrad {

/// Default constant s inside log(s/|x|) for the log-type fundamental
/// solutions. Shifting s changes the profile by an additive constant that the
/// boundary correction absorbs, so solves are independent of it.
inline constexpr double kDefaultLogScale = 5.0;

namespace detail {

/// -Delta (c r^{-2k}) = c * 2k (N-2-2k) r^{-2k-2} away from the origin.
inline double neg_laplace_power_factor(int k, int N) {
    return 2.0 * k * static_cast<double>(N - 2 - 2 * k);
}

/// Distributional mass produced when the power chain hits the Green kernel:
/// -Delta r^{2-N} = (N-2) |S^{N-1}| delta_0.
inline double green_kernel_mass(int N) { return static_cast<double>(N - 2) * sphere_surface(N); }

}  // namespace detail

/// Normalization K of the log-type fundamental solution of (-Delta)^m in
/// R^{2m}: (-Delta)^m [log(s/r) / K] = delta_0, i.e. K = mass of
/// (-Delta)^m log(1/r). m = 2 gives 8 pi^2; m = 3 gives 64 pi^3.
inline double polyharmonic_log_mass(int m) {
    if (m < 1) throw std::invalid_argument("polyharmonic_log_mass: m >= 1 required");
    const int N = 2 * m;
    if (m == 1) return sphere_surface(2);  // -Delta log(1/r) = 2 pi delta_0 in R^2
    // -Delta log(1/r) = (N-2) r^{-2}; then descend through the power chain.
    double c = static_cast<double>(N - 2);
    for (int k = 1; k <= m - 2; ++k) c *= detail::neg_laplace_power_factor(k, N);
    return c * detail::green_kernel_mass(N);
}

/// Normalization K_j of the power-type fundamental solution of (-Delta)^j in
/// R^N for j < N/2: (-Delta)^j [r^{2j-N} / K_j] = delta_0.
inline double polyharmonic_power_mass(int j, int N) {
    if (j < 1 || 2 * j >= N) throw std::invalid_argument("polyharmonic_power_mass: need 1 <= j < N/2");
    double c = 1.0;
    for (int k = N / 2 - j; k <= N / 2 - 2; ++k) c *= detail::neg_laplace_power_factor(k, N);
    return c * detail::green_kernel_mass(N);
}

/// Fundamental solution Gamma of -Delta in R^N, N >= 3:
/// Gamma(r) = 1 / ((N-2) |S^{N-1}| r^{N-2}). In R^4 this is 1/(4 pi^2 r^2).
inline double fundamental_laplace(int N, double r) {
    if (N < 3) throw std::invalid_argument("fundamental_laplace: N >= 3 required");
    if (r <= 0.0) throw std::invalid_argument("fundamental_laplace: r must be positive");
    return 1.0 / (static_cast<double>(N - 2) * sphere_surface(N) * std::pow(r, N - 2));
}

/// Fundamental solution Phi of Delta^2 in R^N evaluated at radius r.
///
/// N = 4: log(s/r) / (8 pi^2); N >= 5: r^{4-N} / (2 (N-4) (N-2) |S^{N-1}|).
/// N = 2, 3 return the unnormalized profiles r^2 log(s/r) and r (no standard
/// positive normalization exists there; callers treat them as shapes only).
inline double fundamental_biharmonic(int N, double r, double log_scale = kDefaultLogScale) {
    if (r <= 0.0) throw std::invalid_argument("fundamental_biharmonic: r must be positive");
    if (N < 2) throw std::invalid_argument("fundamental_biharmonic: N >= 2 required");
    switch (N) {
        case 2: return r * r * std::log(log_scale / r);
        case 3: return r;
        case 4: return std::log(log_scale / r) / polyharmonic_log_mass(2);
        default: return std::pow(r, 4 - N) / polyharmonic_power_mass(2, N);
    }
}

/// Basis function psi_i for the charge decomposition in R^{2m}:
/// psi_i is the fundamental solution of (-Delta)^{m-i}, so that
/// (-Delta)^m psi_i = (-Delta)^i delta_0. The basis forms an exact chain,
/// -Delta psi_i = psi_{i+1} away from the origin and -Delta psi_{m-1} = delta_0.
/// For m = 2 this is {Phi, Gamma}.
inline double singular_basis_value(int m, int i, double r, double log_scale = kDefaultLogScale) {
    if (i < 0 || i >= m) throw std::invalid_argument("singular_basis_value: need 0 <= i < m");
    if (r <= 0.0) throw std::invalid_argument("singular_basis_value: r must be positive");
    const int N = 2 * m;
    const int order = m - i;
    if (order == m) return std::log(log_scale / r) / polyharmonic_log_mass(m);
    return std::pow(r, 2 * order - N) / polyharmonic_power_mass(order, N);
}

/// Structured view of one fundamental solution, as used in reports.
struct FundamentalSolution {
    enum class Operator { laplace, biharmonic, polyharmonic };
    Operator op = Operator::biharmonic;
    int dimension = 4;
    int order = 2;  // m for polyharmonic
    double normalization = 1.0;
    double log_scale = kDefaultLogScale;

    static FundamentalSolution laplace(int N) {
        FundamentalSolution f;
        f.op = Operator::laplace;
        f.dimension = N;
        f.order = 1;
        f.normalization = 1.0 / (static_cast<double>(N - 2) * sphere_surface(N));
        return f;
    }

    static FundamentalSolution biharmonic(int N, double log_scale = kDefaultLogScale) {
        FundamentalSolution f;
        f.op = Operator::biharmonic;
        f.dimension = N;
        f.order = 2;
        f.log_scale = log_scale;
        f.normalization = (N == 4)   ? 1.0 / polyharmonic_log_mass(2)
                          : (N >= 5) ? 1.0 / polyharmonic_power_mass(2, N)
                                     : 1.0;
        return f;
    }

    static FundamentalSolution polyharmonic(int m, double log_scale = kDefaultLogScale) {
        FundamentalSolution f;
        f.op = Operator::polyharmonic;
        f.dimension = 2 * m;
        f.order = m;
        f.log_scale = log_scale;
        f.normalization = 1.0 / polyharmonic_log_mass(m);
        return f;
    }

    double value(double r) const {
        switch (op) {
            case Operator::laplace: return fundamental_laplace(dimension, r);
            case Operator::biharmonic: return fundamental_biharmonic(dimension, r, log_scale);
            case Operator::polyharmonic: return singular_basis_value(order, 0, r, log_scale);
        }
        throw NumericalError("FundamentalSolution: unknown operator");
    }
};

}  // namespace polyrad
