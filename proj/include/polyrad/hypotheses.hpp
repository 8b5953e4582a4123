#pragma once

#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "polyrad/calculus.hpp"
#include "polyrad/nonlinearity.hpp"

namespace polyrad {

struct HypothesisItem {
    std::string name;
    bool pass = false;
    std::string witness;  // violating sample, chosen exponent, quadrature value, ...
    double value = 0.0;
};

struct HypothesisReport {
    std::vector<HypothesisItem> items;
    bool all_pass = true;

    void add(HypothesisItem item) {
        all_pass = all_pass && item.pass;
        items.push_back(std::move(item));
    }
};

namespace detail {

inline std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace detail

/// Check (H1)-(H3) for m = 2 and their primed analogues for general m:
///   H1: f continuous, nondecreasing on R+, f(0) = 0, f >= 0
///   H2: a in L^k for some k > 2m/(2m-1)
///   H3: ess inf over B_{r0} of a is strictly positive
/// Validation never throws; every item carries a pass flag and a witness.
/// The optional grid supplies the quadrature domain for tabulated weights.
inline HypothesisReport validate_hypotheses(const Nonlinearity& f, const Weight& a, int m,
                                            const RadialGrid* grid = nullptr) {
    HypothesisReport rep;
    const std::string tag = (m == 2) ? "" : "'";

    // --- H1 on f ---
    {
        HypothesisItem h1{"H1" + tag + ": f nondecreasing, f(0) = 0, f >= 0", true, "", 0.0};
        double f0 = 0.0;
        bool evaluable = true;
        try {
            f0 = f(0.0);
        } catch (const std::exception&) {
            evaluable = false;
        }
        if (f.kind == Nonlinearity::Kind::tabulated && !f.table.empty() && f.table.front().first > 0.0) {
            // table does not reach 0; judge the recorded samples only
            f0 = f.table.front().second;
        }
        if (!evaluable || std::abs(f0) > 0.0) {
            h1.pass = false;
            h1.witness = "f(0) = " + detail::fmt(f0);
        }
        if (f.kind == Nonlinearity::Kind::tabulated) {
            for (std::size_t i = 0; i < f.table.size(); ++i) {
                const auto [t, v] = f.table[i];
                if (v < 0.0) {
                    h1.pass = false;
                    h1.witness = "f(" + detail::fmt(t) + ") = " + detail::fmt(v) + " < 0";
                    break;
                }
                if (i > 0 && v < f.table[i - 1].second) {
                    h1.pass = false;
                    h1.witness = "f decreases at t = " + detail::fmt(t);
                    break;
                }
            }
        } else {
            // symbolic kinds are nondecreasing and nonnegative whenever their
            // parameters are admissible
            if (f.kind == Nonlinearity::Kind::power && f.p <= 0.0) {
                h1.pass = false;
                h1.witness = "power exponent p <= 0";
            }
            if (f.kind == Nonlinearity::Kind::exponential && (f.C <= 0.0 || f.gamma <= 0.0)) {
                h1.pass = false;
                h1.witness = "exponential kind needs C, gamma > 0";
            }
        }
        rep.add(std::move(h1));
    }

    // --- H2 on a ---
    {
        const double k_min = 2.0 * m / (2.0 * m - 1.0);
        HypothesisItem h2{"H2" + tag + ": a in L^k, k > " + detail::fmt(k_min), true, "", 0.0};
        const double k = a.integrability_exponent;
        const int N = 2 * m;
        if (!(k > k_min)) {
            h2.pass = false;
            h2.witness = "declared k = " + detail::fmt(k) + " not above " + detail::fmt(k_min);
        } else if (a.kind == Weight::Kind::power_law) {
            // int_B |x|^{sigma k} finite iff sigma k > -N
            const bool integrable = a.sigma * k > -static_cast<double>(N);
            h2.pass = integrable;
            h2.value = k;
            h2.witness = integrable ? "k = " + detail::fmt(k) + ", sigma k = " + detail::fmt(a.sigma * k) +
                                          " > -" + detail::fmt(N)
                                    : "sigma k = " + detail::fmt(a.sigma * k) + " <= -" + detail::fmt(N) +
                                          " for every admissible k";
            if (integrable && a.sigma < 0.0 && -static_cast<double>(N) / a.sigma <= k_min) {
                h2.pass = false;
                h2.witness = "no k above " + detail::fmt(k_min) + " keeps |x|^{sigma k} integrable";
            }
        } else if (grid != nullptr) {
            auto res = ball_integral_fn(*grid, [&](double r) { return std::pow(a(r), k); });
            h2.pass = !res.diverged && std::isfinite(res.value);
            h2.value = res.value;
            h2.witness = "quadrature of a^k = " + detail::fmt(res.value) + (res.diverged ? " (diverged)" : "");
        } else {
            h2.pass = false;
            h2.witness = "tabulated weight needs a grid for the quadrature check";
        }
        rep.add(std::move(h2));
    }

    // --- H3 on a ---
    {
        HypothesisItem h3{"H3" + tag + ": ess inf over B_{r0} of a > 0", true, "", 0.0};
        double inf = a.essential_infimum;
        if (a.kind == Weight::Kind::power_law)
            inf = (a.sigma <= 0.0) ? a(std::max(a.positivity_radius, 1e-300)) : 0.0;
        h3.pass = inf > 0.0;
        h3.value = inf;
        h3.witness = "ess inf = " + detail::fmt(inf) + " at r0 = " + detail::fmt(a.positivity_radius);
        rep.add(std::move(h3));
    }

    return rep;
}

}  // namespace polyrad
