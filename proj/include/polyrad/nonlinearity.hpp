#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyrad/errors.hpp"

namespace polyrad {

/// A pair (gamma, C) witnessing f(t) <= C e^{gamma t} on [0, infinity).
struct GrowthWitness {
    double gamma = 1.0;
    double C = 1.0;
};

enum class GrowthClass { sub_exponential, super_exponential };

/// The nonlinearity f. Symbolic kinds classify exactly; tabulated data is
/// classified by sampling. All kinds satisfy f(0) = 0 by construction except
/// tabulated data, which is taken as given.
///
///   power:       f(t) = t^p
///   exponential: f(t) = C (e^{gamma t} - 1)
///   exp_power:   f(t) = e^{t^delta} - 1
struct Nonlinearity {
    enum class Kind { power, exponential, exp_power, tabulated };

    Kind kind = Kind::power;
    double p = 2.0;
    double gamma = 1.0;
    double C = 1.0;
    double delta = 2.0;
    std::vector<std::pair<double, double>> table;  // (t, f(t)), t increasing
    std::optional<GrowthClass> declared_class;

    static Nonlinearity power(double p) {
        Nonlinearity f;
        f.kind = Kind::power;
        f.p = p;
        return f;
    }
    static Nonlinearity exponential(double gamma, double C) {
        Nonlinearity f;
        f.kind = Kind::exponential;
        f.gamma = gamma;
        f.C = C;
        return f;
    }
    static Nonlinearity exp_power(double delta) {
        Nonlinearity f;
        f.kind = Kind::exp_power;
        f.delta = delta;
        return f;
    }
    static Nonlinearity tabulated(std::vector<std::pair<double, double>> samples) {
        Nonlinearity f;
        f.kind = Kind::tabulated;
        f.table = std::move(samples);
        if (f.table.size() < 2) throw std::invalid_argument("tabulated nonlinearity: need >= 2 samples");
        for (std::size_t i = 1; i < f.table.size(); ++i)
            if (f.table[i].first <= f.table[i - 1].first)
                throw std::invalid_argument("tabulated nonlinearity: abscissae must increase");
        return f;
    }

    double operator()(double t) const {
        if (t < 0.0) throw std::invalid_argument("nonlinearity: negative argument");
        switch (kind) {
            case Kind::power: return std::pow(t, p);
            case Kind::exponential: return C * std::expm1(gamma * t);
            case Kind::exp_power: return std::expm1(std::pow(t, delta));
            case Kind::tabulated: {
                if (t < table.front().first || t > table.back().first)
                    throw NumericalError("tabulated nonlinearity: argument outside table range");
                auto it = std::lower_bound(table.begin(), table.end(), t,
                                           [](const auto& s, double v) { return s.first < v; });
                if (it == table.begin()) return it->second;
                const auto [t1, f1] = *it;
                const auto [t0, f0] = *(it - 1);
                const double w = (t - t0) / (t1 - t0);
                return f0 + w * (f1 - f0);
            }
        }
        throw NumericalError("nonlinearity: unknown kind");
    }

    double table_max_abscissa() const { return table.empty() ? 0.0 : table.back().first; }

    /// Minimal C such that f(t) <= C e^{gamma t} for all t >= 0, when the
    /// kind admits one at this gamma (symbolic kinds only).
    std::optional<double> witness_C(double g) const {
        if (g <= 0.0) return std::nullopt;
        switch (kind) {
            case Kind::power: {
                if (p <= 0.0) return 1.0;
                const double tstar = p / g;  // maximizer of t^p e^{-g t}
                return std::pow(tstar, p) * std::exp(-p);
            }
            case Kind::exponential: return (g >= gamma) ? std::optional<double>(C) : std::nullopt;
            case Kind::exp_power: {
                if (delta < 1.0) {
                    const double tstar = std::pow(delta / g, 1.0 / (1.0 - delta));
                    return std::exp(std::pow(tstar, delta) - g * tstar);
                }
                if (delta == 1.0) return (g >= 1.0) ? std::optional<double>(1.0) : std::nullopt;
                return std::nullopt;  // super-exponential
            }
            case Kind::tabulated: return std::nullopt;  // sampled path in classify_growth
        }
        return std::nullopt;
    }
};

/// The weight a. power_law means a(r) = r^sigma.
struct Weight {
    enum class Kind { power_law, tabulated };

    Kind kind = Kind::power_law;
    double sigma = 0.0;
    std::vector<std::pair<double, double>> table;  // (r, a(r)), r increasing
    double integrability_exponent = 2.0;           // declared k for (H2)
    double positivity_radius = 0.5;                // r0 for (H3)
    double essential_infimum = 1.0;                // ess inf over B_{r0}

    static Weight power_law(double sigma, double r0 = 0.5) {
        Weight a;
        a.kind = Kind::power_law;
        a.sigma = sigma;
        a.positivity_radius = r0;
        // default k: midpoint of the admissible interval for m = 2 in R^4,
        // clamped to stay integrable for negative sigma
        const double k_min = 4.0 / 3.0;
        if (sigma < 0.0) {
            const double k_max = 4.0 / (-sigma);
            a.integrability_exponent = (k_max > k_min) ? 0.5 * (k_min + k_max) : k_min * 1.001;
        } else {
            a.integrability_exponent = 2.0 * k_min;
        }
        a.essential_infimum = (sigma <= 0.0) ? std::pow(r0, sigma) : 0.0;
        return a;
    }

    static Weight constant(double c = 1.0, double r0 = 0.5) {
        Weight a = power_law(0.0, r0);
        a.essential_infimum = c;
        a.scale = c;
        return a;
    }

    static Weight tabulated(std::vector<std::pair<double, double>> samples, double k, double r0) {
        Weight a;
        a.kind = Kind::tabulated;
        a.table = std::move(samples);
        if (a.table.size() < 2) throw std::invalid_argument("tabulated weight: need >= 2 samples");
        a.integrability_exponent = k;
        a.positivity_radius = r0;
        double inf = a.table.front().second;
        for (const auto& [r, v] : a.table)
            if (r <= r0) inf = std::min(inf, v);
        a.essential_infimum = inf;
        return a;
    }

    double scale = 1.0;  // multiplier for power_law kind

    double operator()(double r) const {
        if (r <= 0.0) throw std::invalid_argument("weight: r must be positive");
        if (kind == Kind::power_law) return scale * std::pow(r, sigma);
        if (r <= table.front().first) return table.front().second;
        if (r >= table.back().first) return table.back().second;
        auto it = std::lower_bound(table.begin(), table.end(), r,
                                   [](const auto& s, double v) { return s.first < v; });
        const auto [r1, a1] = *it;
        const auto [r0, a0] = *(it - 1);
        const double w = (r - r0) / (r1 - r0);
        return a0 + w * (a1 - a0);
    }
};

/// Growth classification per the sub/super-exponential dichotomy and the
/// superquadratic threshold lim f(t)/t^2 in (0, inf].
struct GrowthReport {
    bool superquadratic = false;
    bool sub_exponential = false;
    bool super_exponential = false;
    std::optional<GrowthWitness> witness;  // present iff sub_exponential
    bool exact = true;                     // false when sampled (tabulated kind)
    std::string note;
};

namespace detail {

inline std::vector<double> geometric_samples(double lo, double hi, int per_decade) {
    std::vector<double> out;
    const double step = std::pow(10.0, 1.0 / per_decade);
    for (double t = lo; t <= hi * (1.0 + 1e-12); t *= step) out.push_back(std::min(t, hi));
    if (out.back() < hi) out.push_back(hi);
    return out;
}

/// "Unbounded along samples" proxy: last-decade max exceeds 1e6 x first-decade max.
inline bool sampled_unbounded(const std::vector<double>& ts, const std::vector<double>& vals) {
    const double t_lo = ts.front(), t_hi = ts.back();
    double first_max = 0.0, last_max = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i] <= 10.0 * t_lo) first_max = std::max(first_max, vals[i]);
        if (ts[i] >= 0.1 * t_hi) last_max = std::max(last_max, vals[i]);
    }
    return last_max > 1e6 * first_max;
}

}  // namespace detail

/// Classify f. Symbolic kinds are classified exactly from their parameters;
/// the tabulated kind is sampled geometrically on [1, t_max] with 32 points
/// per decade, using the declared finite proxies for the limit statements.
inline GrowthReport classify_growth(const Nonlinearity& f, double t_max = 1e4) {
    if (t_max < 10.0) throw std::invalid_argument("classify_growth: t_max >= 10 required");
    GrowthReport rep;
    switch (f.kind) {
        case Nonlinearity::Kind::power:
            rep.superquadratic = f.p >= 2.0;
            rep.sub_exponential = true;
            rep.witness = GrowthWitness{1.0, *f.witness_C(1.0)};
            rep.note = "power kind: exact";
            return rep;
        case Nonlinearity::Kind::exponential:
            rep.superquadratic = true;
            rep.sub_exponential = true;
            rep.witness = GrowthWitness{f.gamma, f.C};
            rep.note = "exponential kind: exact";
            return rep;
        case Nonlinearity::Kind::exp_power:
            rep.superquadratic = true;
            if (f.delta <= 1.0) {
                rep.sub_exponential = true;
                rep.witness = GrowthWitness{1.0, *f.witness_C(1.0)};
            } else {
                rep.super_exponential = true;
            }
            rep.note = "exp_power kind: exact";
            return rep;
        case Nonlinearity::Kind::tabulated: break;
    }

    if (t_max > f.table_max_abscissa())
        throw std::invalid_argument("classify_growth: t_max exceeds table range");
    rep.exact = false;
    const auto ts = detail::geometric_samples(1.0, t_max, 32);

    // superquadratic proxy, scale-free: min of f/t^2 over the top decade must
    // not collapse relative to the max over the first decade
    double first_max = 0.0, last_min = std::numeric_limits<double>::infinity();
    for (double t : ts) {
        const double q = f(t) / (t * t);
        if (t <= 10.0) first_max = std::max(first_max, q);
        if (t >= 0.1 * t_max) last_min = std::min(last_min, q);
    }
    rep.superquadratic = last_min > 0.0 && last_min >= 1e-2 * first_max;

    // sub-exponential search: smallest sampled gamma whose f(t) e^{-gamma t}
    // stays bounded under the sampling proxy
    for (double g : detail::geometric_samples(1e-3, 1e3, 8)) {
        std::vector<double> damped(ts.size());
        double cmax = 0.0;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            damped[i] = f(ts[i]) * std::exp(-g * ts[i]);
            cmax = std::max(cmax, damped[i]);
        }
        if (!detail::sampled_unbounded(ts, damped)) {
            rep.sub_exponential = true;
            rep.witness = GrowthWitness{g, cmax};
            break;
        }
    }
    rep.super_exponential = !rep.sub_exponential;
    rep.note = "tabulated kind: sampled on [1, " + std::to_string(t_max) + "]";
    return rep;
}

}  // namespace polyrad
