#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polyrad/fundamental.hpp"
#include "polyrad/grid.hpp"

namespace polyrad {

/// Measure coefficients (alpha_0, ..., alpha_{m-1}) of the charge
/// decomposition; for m = 2 this is (alpha, beta).
using ChargeVector = std::vector<double>;

/// Grid samples plus an explicit analytic singular part. The singular part is
/// a coefficient vector on the basis {psi_0, ..., psi_{m-1}} of fundamental
/// solutions (see singular_basis_value), so Dirac charges are never
/// discretized: value(i) = regular[i] + sum_j singular[j] psi_j(r_i).
struct RadialField {
    GridPtr grid;
    std::vector<double> regular;         // one per node
    std::optional<double> origin_value;  // analytic value at r = 0; nullopt marks a singular field
    std::vector<double> singular;        // empty or size m
    double log_scale = kDefaultLogScale;

    std::size_t size() const { return regular.size(); }

    bool has_singular() const {
        for (double c : singular)
            if (c != 0.0) return true;
        return false;
    }

    double singular_at(double r) const {
        if (singular.empty()) return 0.0;
        const int m = grid->harmonic_order();
        double s = 0.0;
        for (int j = 0; j < m; ++j)
            if (singular[static_cast<std::size_t>(j)] != 0.0)
                s += singular[static_cast<std::size_t>(j)] * singular_basis_value(m, j, r, log_scale);
        return s;
    }

    /// Total value at node i (regular sample plus analytic singular part).
    double value(std::size_t i) const { return regular[i] + singular_at(grid->node(i)); }

    std::vector<double> values() const {
        std::vector<double> out(size());
        for (std::size_t i = 0; i < size(); ++i) out[i] = value(i);
        return out;
    }

    double sup_norm() const {
        double s = 0.0;
        for (std::size_t i = 0; i < size(); ++i) s = std::max(s, std::abs(value(i)));
        return s;
    }

    /// Copy with the singular part folded into the nodal samples. Used by
    /// operations that deliberately difference the raw values.
    RadialField flattened() const {
        RadialField out;
        out.grid = grid;
        out.regular = values();
        out.origin_value = has_singular() ? std::nullopt : origin_value;
        out.singular.assign(singular.size(), 0.0);
        out.log_scale = log_scale;
        return out;
    }

    static RadialField zero(GridPtr g) {
        RadialField f;
        f.regular.assign(g->size(), 0.0);
        f.singular.assign(static_cast<std::size_t>(g->harmonic_order()), 0.0);
        f.origin_value = 0.0;
        f.grid = std::move(g);
        return f;
    }

    static RadialField from_function(GridPtr g, const std::function<double(double)>& fn,
                                     std::optional<double> origin = std::nullopt) {
        RadialField f = zero(std::move(g));
        for (std::size_t i = 0; i < f.size(); ++i) f.regular[i] = fn(f.grid->node(i));
        f.origin_value = origin;
        return f;
    }
};

/// Prefix restriction of a field to a sub-grid produced by restrict_to_radius.
inline RadialField restrict_field(const RadialField& f, GridPtr sub) {
    if (sub->size() > f.size()) throw std::invalid_argument("restrict_field: sub-grid larger than field");
    for (std::size_t i = 0; i < sub->size(); ++i)
        if (sub->node(i) != f.grid->node(i))
            throw std::invalid_argument("restrict_field: sub-grid is not a prefix of the field grid");
    RadialField out;
    out.grid = std::move(sub);
    out.regular.assign(f.regular.begin(), f.regular.begin() + static_cast<std::ptrdiff_t>(out.grid->size()));
    out.origin_value = f.origin_value;
    out.singular = f.singular;
    out.log_scale = f.log_scale;
    return out;
}

inline RadialField operator+(const RadialField& a, const RadialField& b) {
    if (a.grid.get() != b.grid.get() || a.size() != b.size())
        throw std::invalid_argument("field addition: grids differ");
    RadialField out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.regular[i] += b.regular[i];
    if (out.singular.size() < b.singular.size()) out.singular.resize(b.singular.size(), 0.0);
    for (std::size_t j = 0; j < b.singular.size(); ++j) out.singular[j] += b.singular[j];
    if (a.origin_value && b.origin_value)
        out.origin_value = *a.origin_value + *b.origin_value;
    else
        out.origin_value = std::nullopt;
    return out;
}

inline RadialField operator*(double c, const RadialField& f) {
    RadialField out = f;
    for (double& v : out.regular) v *= c;
    for (double& v : out.singular) v *= c;
    if (out.origin_value) out.origin_value = c * *out.origin_value;
    return out;
}

}  // namespace polyrad
