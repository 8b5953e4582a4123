#pragma once

#include <cmath>
#include <numbers>

#include "polyrad/errors.hpp"

namespace polyrad {

/// Surface area of the unit d-sphere S^d embedded in R^{d+1}:
/// |S^d| = 2 pi^{(d+1)/2} / Gamma((d+1)/2).
inline double unit_sphere_area(int d) {
    if (d < 0) throw NumericalError("unit_sphere_area: negative dimension");
    const double half = 0.5 * static_cast<double>(d + 1);
    return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

/// |S^{N-1}|, the boundary area of the unit ball in R^N. N = 4 gives 2 pi^2.
inline double sphere_surface(int N) { return unit_sphere_area(N - 1); }

/// Volume of the unit ball in R^N. N = 4 gives pi^2 / 2.
inline double unit_ball_volume(int N) { return sphere_surface(N) / static_cast<double>(N); }

inline double factorial(int n) {
    double out = 1.0;
    for (int k = 2; k <= n; ++k) out *= static_cast<double>(k);
    return out;
}

/// Sharp exponential-integrability constant for (-Delta)^m in R^{2m}:
/// gamma_m = ((2m-1)!/2) |S^{2m}|. m = 2 gives 8 pi^2, m = 3 gives 64 pi^3.
inline double martinazzi_gamma(int m) {
    if (m < 1) throw NumericalError("martinazzi_gamma: m must be >= 1");
    return 0.5 * factorial(2 * m - 1) * unit_sphere_area(2 * m);
}

}  // namespace polyrad
