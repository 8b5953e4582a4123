#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "polyrad/errors.hpp"

namespace polyrad {

/// Thomas algorithm for A x = d with sub/main/super diagonals (lo, di, up);
/// lo[0] and up[n-1] are unused. No pivoting: intended for the diagonally
/// dominant M-matrices produced by the radial Poisson discretization.
inline std::vector<double> solve_tridiagonal(const std::vector<double>& lo, const std::vector<double>& di,
                                             const std::vector<double>& up, const std::vector<double>& d) {
    const std::size_t n = di.size();
    if (lo.size() != n || up.size() != n || d.size() != n)
        throw NumericalError("solve_tridiagonal: band sizes differ");
    if (n == 0) return {};
    std::vector<double> c(n, 0.0), y(n, 0.0), x(n, 0.0);
    if (di[0] == 0.0) throw NumericalError("solve_tridiagonal: zero pivot at row 0");
    c[0] = up[0] / di[0];
    y[0] = d[0] / di[0];
    for (std::size_t i = 1; i < n; ++i) {
        const double m = di[i] - lo[i] * c[i - 1];
        if (m == 0.0 || !std::isfinite(m)) throw NumericalError("solve_tridiagonal: singular system");
        c[i] = up[i] / m;
        y[i] = (d[i] - lo[i] * y[i - 1]) / m;
    }
    x[n - 1] = y[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = y[i] - c[i] * x[i + 1];
    return x;
}

}  // namespace polyrad
