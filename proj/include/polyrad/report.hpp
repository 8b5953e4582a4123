#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyrad/analysis.hpp"
#include "polyrad/field.hpp"
#include "polyrad/hypotheses.hpp"
#include "polyrad/iteration.hpp"
#include "polyrad/nonlinearity.hpp"

namespace polyrad {

using json = nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;

namespace detail {

/// Full round-trip precision decimal formatting for CSV dumps.
inline std::string full_precision(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

inline void to_json(json& j, const HypothesisItem& h) {
    j = json{{"name", h.name}, {"pass", h.pass}, {"witness", h.witness}, {"value", h.value}};
}

inline void to_json(json& j, const HypothesisReport& r) {
    j = json{{"all_pass", r.all_pass}, {"items", r.items}};
}

inline void to_json(json& j, const GrowthReport& r) {
    j = json{{"superquadratic", r.superquadratic},
             {"sub_exponential", r.sub_exponential},
             {"super_exponential", r.super_exponential},
             {"exact", r.exact},
             {"note", r.note}};
    if (r.witness) j["witness"] = json{{"gamma", r.witness->gamma}, {"C", r.witness->C}};
}

inline void to_json(json& j, const AsymptoticFit& f) {
    j = json{{"alpha_hat", f.alpha_hat},   {"beta_hat", f.beta_hat},
             {"constant_hat", f.constant_hat}, {"window", {f.window_lo, f.window_hi}},
             {"residual_rms", f.residual}, {"condition", f.condition},
             {"nodes_used", f.nodes_used}};
}

inline void to_json(json& j, const FluxEstimate& f) {
    j = json{{"charge", f.charge}, {"per_node", f.per_node}, {"radii", f.radii}};
}

inline void to_json(json& j, const CheckOutcome& c) {
    j = json{{"applicable", c.applicable},
             {"diverged", c.diverged},
             {"value", c.value},
             {"gamma_used", c.gamma_used},
             {"note", c.note}};
}

inline void to_json(json& j, const RemovabilityOutcome& c) {
    to_json(j, static_cast<const CheckOutcome&>(c));
    j["diverged_full_bound"] = c.diverged_full_bound;
}

inline void to_json(json& j, const ExpIntegrabilityResult& r) {
    j = json{{"value", r.overflowed ? json("overflow") : json(r.value)},
             {"log_value", r.log_value},
             {"admissible", r.admissible},
             {"overflowed", r.overflowed},
             {"threshold", r.threshold}};
}

inline void to_json(json& j, const BootstrapExpEntry& e) {
    j = json{{"l", e.l}, {"value", e.value}, {"finite", e.finite}};
}

inline void to_json(json& j, const BootstrapReport& r) {
    j = json{{"applicable", r.applicable}, {"exp_integrals", r.exp_integrals},
             {"holder_r", r.holder_r},     {"holder_p", r.holder_p},
             {"lhs", r.lhs},               {"rhs_product", r.rhs_product},
             {"holder_holds", r.holder_holds}, {"sup_norm", r.sup_norm},
             {"note", r.note}};
}

inline void to_json(json& j, const PropertyFailure& f) {
    j = json{{"trial", f.trial}, {"seed", f.seed}, {"node", f.node}, {"value", f.value}, {"what", f.what}};
}

inline void to_json(json& j, const PropertyReport& r) {
    j = json{{"trials", r.trials}, {"failures", r.failures}, {"all_pass", r.all_pass()}};
}

inline void to_json(json& j, const LogExampleResult& r) {
    j = json{{"b1", r.b1}, {"b2", r.b2}, {"b3", r.b3},
             {"max_rel_residual", r.max_rel_residual},
             {"trimmed_per_end", r.trimmed_per_end}};
}

inline void to_json(json& j, const AlphaWitness& w) {
    j = json{{"feasible", w.feasible}, {"gamma", w.gamma}, {"C", w.C}, {"radius", w.radius}, {"note", w.note}};
}

inline json iteration_report_json(const IterationReport& rep) {
    return json{{"status", to_string(rep.status)},
                {"iterations", rep.iterations},
                {"sup_norm_history", rep.sup_norm_history},
                {"residual", rep.residual},
                {"monotone", rep.monotone},
                {"neg_lap_monotone", rep.neg_lap_monotone},
                {"alpha_within_guarantee", rep.alpha_within_guarantee},
                {"alpha_guarantee", rep.alpha_guarantee},
                {"violation_node", rep.violation_node},
                {"violation_iteration", rep.violation_iteration},
                {"solution_sup_norm", rep.solution.grid ? rep.solution.sup_norm() : 0.0}};
}

/// Field dump: columns r, u, neg_laplacian_u at full precision. `extra`
/// column groups (one vector per column) may follow.
inline void dump_field_csv(const std::string& path, const RadialField& u, const RadialField& neg_lap,
                           const std::vector<std::pair<std::string, std::vector<double>>>& extra = {}) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write CSV: " + path);
    out << "r,u,neg_laplacian_u";
    for (const auto& [name, col] : extra) out << "," << name;
    out << "\n";
    for (std::size_t i = 0; i < u.size(); ++i) {
        out << detail::full_precision(u.grid->node(i)) << "," << detail::full_precision(u.value(i)) << ","
            << detail::full_precision(neg_lap.value(i));
        for (const auto& [name, col] : extra) out << "," << detail::full_precision(col[i]);
        out << "\n";
    }
}

/// Re-ingest a dumped field: the r column becomes the grid (grading detected),
/// the u column the nodal values. The result carries no singular part; the
/// samples are the dumped totals.
inline RadialField read_field_csv(const std::string& path, int dimension) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read CSV: " + path);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("empty CSV: " + path);
    std::vector<double> rs, us;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        if (!std::getline(row, cell, ',')) throw ConfigError("bad CSV row: " + line);
        rs.push_back(std::stod(cell));
        if (!std::getline(row, cell, ',')) throw ConfigError("bad CSV row: " + line);
        us.push_back(std::stod(cell));
    }
    if (rs.size() < 3) throw ConfigError("CSV has fewer than 3 rows: " + path);

    RadialGrid g;
    g.dimension = dimension;
    g.nodes = rs;
    g.radius = rs.back();
    // detect grading from the node pattern
    bool geometric = true, uniform = true;
    for (std::size_t i = 1; i + 1 < rs.size(); ++i) {
        if (std::abs((rs[i + 1] / rs[i]) / (rs[i] / rs[i - 1]) - 1.0) > 1e-9) geometric = false;
        if (std::abs((rs[i + 1] - rs[i]) / (rs[i] - rs[i - 1]) - 1.0) > 1e-9) uniform = false;
    }
    if (geometric)
        g.grading = Grading::geometric(rs[0] / rs[1]);
    else if (uniform)
        g.grading = Grading::uniform();
    else
        throw ConfigError("CSV nodes are neither uniform nor geometric: " + path);

    RadialField f = RadialField::zero(std::make_shared<const RadialGrid>(std::move(g)));
    f.regular = us;
    return f;
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write report: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace polyrad
