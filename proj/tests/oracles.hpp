#pragma once

// Test-side oracles, independent of the library's numerical paths.

#include <cmath>
#include <numbers>

namespace oracles {

/// Radial Laplacian of r^k in R^N: Delta r^k = k (k + N - 2) r^{k-2}.
inline double laplacian_power(double k, int N, double r) {
    return k * (k + N - 2.0) * std::pow(r, k - 2.0);
}

/// Exact biharmonic Navier solution in R^4 for charges (alpha, 0), rhs = 0:
/// u(r) = alpha [ log(R/r)/(8 pi^2) + Gamma(R) (r^2 - R^2)/8 ],
/// derived by hand from the nested Poisson chain with constant stage rhs.
inline double navier_alpha_closed_form(double alpha, double r, double R) {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double gammaR = 1.0 / (4.0 * pi2 * R * R);
    return alpha * (std::log(R / r) / (8.0 * pi2) + gammaR * (r * r - R * R) / 8.0);
}

/// Exact solution in R^4 for charges (0, beta), rhs = 0:
/// u(r) = beta (Gamma(r) - Gamma(R)).
inline double navier_beta_closed_form(double beta, double r, double R) {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return beta * (1.0 / (4.0 * pi2 * r * r) - 1.0 / (4.0 * pi2 * R * R));
}

/// -Delta v = 2N with v(R) = 0 has v = R^2 - r^2.
inline double poisson_constant_rhs_closed_form(double r, double R) { return R * R - r * r; }

}  // namespace oracles
