#pragma once

#include <array>
#include <cstddef>
#include <span>

namespace polyrad::detail {

/// Fornberg's recurrence for finite-difference weights: given nodes xs and an
/// evaluation point x0, fills w[k][j] with the weight of xs[j] in the k-th
/// derivative, k = 0..MaxOrder. Exact for polynomials of degree < xs.size().
template <int MaxOrder, typename Real, std::size_t Width>
inline void fornberg_weights(Real x0, std::span<const Real, Width> xs,
                             std::array<std::array<Real, Width>, MaxOrder + 1>& w) {
    const int n = static_cast<int>(xs.size());
    for (auto& row : w) row.fill(Real(0));
    Real c1 = 1, c4 = xs[0] - x0;
    w[0][0] = 1;
    for (int i = 1; i < n; ++i) {
        const int mn = i < MaxOrder ? i : MaxOrder;
        Real c2 = 1, c5 = c4;
        c4 = xs[static_cast<std::size_t>(i)] - x0;
        for (int j = 0; j < i; ++j) {
            const Real c3 = xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    w[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
                        c1 *
                        (Real(k) * w[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] -
                         c5 * w[static_cast<std::size_t>(k)][static_cast<std::size_t>(i - 1)]) /
                        c2;
                w[0][static_cast<std::size_t>(i)] = -c1 * c5 * w[0][static_cast<std::size_t>(i - 1)] / c2;
            }
            for (int k = mn; k >= 1; --k)
                w[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
                    (c4 * w[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] -
                     Real(k) * w[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j)]) /
                    c3;
            w[0][static_cast<std::size_t>(j)] = c4 * w[0][static_cast<std::size_t>(j)] / c3;
        }
        c1 = c2;
    }
}

/// First and second derivative at x from a 3-point window.
template <typename Real>
struct ThreePointDerivatives {
    Real d1, d2;
};

template <typename Real>
inline ThreePointDerivatives<Real> derivatives3(Real x, const Real* xs, const Real* us) {
    std::array<std::array<Real, 3>, 3> w{};
    fornberg_weights<2, Real, 3>(x, std::span<const Real, 3>(xs, 3), w);
    Real d1 = 0, d2 = 0;
    for (std::size_t j = 0; j < 3; ++j) {
        d1 += w[1][j] * us[j];
        d2 += w[2][j] * us[j];
    }
    return {d1, d2};
}

}  // namespace polyrad::detail
