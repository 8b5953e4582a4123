#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyrad/analysis.hpp"
#include "polyrad/config.hpp"
#include "polyrad/report.hpp"

namespace polyrad {

/// Process exit codes for the CLI contract.
enum ExitCode : int {
    exit_ok = 0,
    exit_config_error = 2,
    exit_hypothesis_failure = 3,
    exit_solver_divergence = 4,
    exit_numerical_failure = 5,
};

struct RunOutput {
    int exit_code = exit_ok;
    json report;
    std::vector<std::string> files_written;
};

namespace detail {

inline Nonlinearity nonlinearity_from_config(const Config& cfg) {
    const std::string kind = cfg.get_string_or("problem.f.kind", "power");
    if (kind == "power") return Nonlinearity::power(cfg.get_double_or("problem.f.p", 2.0));
    if (kind == "exponential")
        return Nonlinearity::exponential(cfg.get_double_or("problem.f.gamma", 1.0),
                                         cfg.get_double_or("problem.f.C", 1.0));
    if (kind == "exp_power") return Nonlinearity::exp_power(cfg.get_double_or("problem.f.delta", 2.0));
    if (kind == "tabulated") return Nonlinearity::tabulated(cfg.get_pair_list("problem.f.table"));
    throw ConfigError("problem.f.kind: unknown kind '" + kind + "'");
}

inline Weight weight_from_config(const Config& cfg) {
    const std::string kind = cfg.get_string_or("problem.a.kind", "power_law");
    if (kind == "power_law") {
        Weight a = Weight::power_law(cfg.get_double_or("problem.a.sigma", 0.0),
                                     cfg.get_double_or("problem.a.r0", 0.5));
        a.scale = cfg.get_double_or("problem.a.scale", 1.0);
        if (cfg.has("problem.a.k")) a.integrability_exponent = cfg.get_double("problem.a.k");
        return a;
    }
    if (kind == "tabulated")
        return Weight::tabulated(cfg.get_pair_list("problem.a.table"), cfg.get_double_or("problem.a.k", 2.0),
                                 cfg.get_double_or("problem.a.r0", 0.5));
    throw ConfigError("problem.a.kind: unknown kind '" + kind + "'");
}

inline GridPtr grid_from_config(const Config& cfg, int dimension, double default_R = 1.0) {
    const int n = static_cast<int>(cfg.get_int_or("grid.n", 512));
    const double R = cfg.get_double_or("grid.R", default_R);
    const std::string grading = cfg.get_string_or("grid.grading", "geometric");
    if (grading == "uniform") return make_uniform_grid(dimension, R, n);
    if (grading != "geometric") throw ConfigError("grid.grading: expected uniform or geometric");
    if (cfg.has("grid.q")) return make_geometric_grid(dimension, R, n - 1, cfg.get_double("grid.q"));
    const double eps = cfg.get_double_or("grid.eps", 1e-3 * R);
    return make_geometric_grid_to_eps(dimension, R, n, eps);
}

inline std::string out_path(const Config& cfg, const std::string& name) {
    const std::string dir = cfg.get_string_or("out_dir", ".");
    std::filesystem::create_directories(dir);
    return (std::filesystem::path(dir) / name).string();
}

inline json config_echo(const Config& cfg) {
    json j = json::object();
    for (const auto& [k, v] : cfg.entries()) j[k] = v;
    return j;
}

inline RunOutput run_solve(const Config& cfg) {
    RunOutput out;
    const int m = static_cast<int>(cfg.get_int_or("problem.m", 2));
    if (m != 2 && m != 3) throw ConfigError("problem.m: the iteration is implemented for m in {2, 3}");
    const Nonlinearity f = nonlinearity_from_config(cfg);
    const Weight a = weight_from_config(cfg);

    json rep;
    rep["schema_version"] = kReportSchemaVersion;
    rep["command"] = "solve";
    rep["config"] = config_echo(cfg);

    const auto hyp = validate_hypotheses(f, a, m);
    rep["hypotheses"] = hyp;
    if (!hyp.all_pass) {
        rep["status"] = "hypothesis_failure";
        out.report = rep;
        out.exit_code = exit_hypothesis_failure;
        return out;
    }

    const double gamma = cfg.get_double_or("problem.witness.gamma", 1.0);
    std::optional<double> C;
    if (cfg.has("problem.witness.C"))
        C = cfg.get_double("problem.witness.C");
    else
        C = f.witness_C(gamma);
    if (!C) {
        rep["status"] = "no_subexponential_witness";
        rep["growth"] = classify_growth(f);
        out.report = rep;
        out.exit_code = exit_hypothesis_failure;
        return out;
    }

    if (cfg.get_double_or("grid.R", 1.0) != 1.0)
        throw ConfigError("solve: the barrier construction requires grid.R = 1");
    GridPtr unit_grid = grid_from_config(cfg, 2 * m);

    const auto phi = barrier_phi(a, m, unit_grid);
    const auto bar = supersolution(gamma, *C, phi);
    const double r_star = supersolution_radius(gamma, *C, phi);

    double alpha = 0.0;
    if (cfg.has("problem.alpha_star_fraction"))
        alpha = cfg.get_double("problem.alpha_star_fraction") * alpha_star(m, gamma);
    else
        alpha = cfg.get_double_or("problem.alpha", 0.0);

    GridPtr run_grid = restrict_to_radius(*unit_grid, r_star);
    Supersolution bar_run;
    bar_run.gamma = bar.gamma;
    bar_run.C = bar.C;
    bar_run.u_bar = restrict_field(bar.u_bar, run_grid);
    bar_run.neg_laplacian = restrict_field(bar.neg_laplacian, run_grid);

    ProblemSpec problem;
    problem.m = m;
    problem.grid = run_grid;
    problem.weight = a;
    problem.f = f;
    problem.alpha = alpha;
    problem.witness = GrowthWitness{gamma, *C};

    MonotoneOptions opts;
    opts.tol = cfg.get_double_or("tol.iteration", 1e-8);
    opts.max_iterations = static_cast<int>(cfg.get_int_or("tol.max_iterations", 500));
    opts.record_iterates = cfg.has("output.iterates_csv");

    const auto it = monotone_solve(problem, bar_run, opts);

    rep["witness"] = json{{"gamma", gamma}, {"C", *C}};
    rep["supersolution_radius"] = r_star;
    rep["alpha"] = alpha;
    rep["iteration"] = iteration_report_json(it);
    rep["status"] = to_string(it.status);

    if (it.status == SolveStatus::converged) {
        try {
            rep["charge_fit"] = estimate_charges(it.solution);
            rep["flux"] = flux_charge_estimate(it.solution);
        } catch (const std::exception& e) {
            rep["charge_fit_error"] = e.what();
        }
    }

    if (cfg.has("output.solution_csv")) {
        const auto path = out_path(cfg, cfg.get_string("output.solution_csv"));
        dump_field_csv(path, it.solution, it.neg_laplacian);
        out.files_written.push_back(path);
    }
    if (opts.record_iterates && !it.iterates.empty()) {
        const auto path = out_path(cfg, cfg.get_string("output.iterates_csv"));
        std::vector<std::pair<std::string, std::vector<double>>> cols;
        for (std::size_t k = 0; k < it.iterates.size(); ++k)
            cols.emplace_back("u_" + std::to_string(k + 1), it.iterates[k].values());
        dump_field_csv(path, it.solution, it.neg_laplacian, cols);
        out.files_written.push_back(path);
    }

    out.report = rep;
    out.exit_code = (it.status == SolveStatus::converged) ? exit_ok : exit_solver_divergence;
    return out;
}

inline RunOutput run_classify(const Config& cfg) {
    RunOutput out;
    const Nonlinearity f = nonlinearity_from_config(cfg);
    const auto growth = classify_growth(f, cfg.get_double_or("classify.t_max", 1e4));
    json rep;
    rep["schema_version"] = kReportSchemaVersion;
    rep["command"] = "classify";
    rep["config"] = config_echo(cfg);
    rep["growth"] = growth;
    rep["verdicts"] = json{
        {"beta_must_vanish", growth.superquadratic},
        {"alpha_must_vanish", growth.super_exponential},
        {"removable_singularity", growth.super_exponential},
    };
    out.report = rep;
    return out;
}

inline RunOutput run_charges(const Config& cfg) {
    RunOutput out;
    const int m = static_cast<int>(cfg.get_int_or("problem.m", 2));
    const RadialField u = read_field_csv(cfg.get_string("input.field_csv"), 2 * m);
    const double eps = u.grid->inner_cutoff();
    const double lo = cfg.get_double_or("charges.window_lo", eps);
    const double hi = cfg.get_double_or("charges.window_hi", 10.0 * eps);
    json rep;
    rep["schema_version"] = kReportSchemaVersion;
    rep["command"] = "charges";
    rep["config"] = config_echo(cfg);
    rep["fit"] = estimate_charges(u, lo, hi);
    out.report = rep;
    return out;
}

inline RunOutput run_verify_example(const Config& cfg) {
    RunOutput out;
    const double mu = cfg.get_double_or("example.mu", 2.0);
    Config grid_cfg = cfg;  // default window for the identity: r in [1e-3, 0.1]
    if (!cfg.has("grid.R")) grid_cfg.set("grid.R", "0.1");
    if (!cfg.has("grid.eps")) grid_cfg.set("grid.eps", "1e-3");
    GridPtr grid = grid_from_config(grid_cfg, 4, 0.1);
    json rep;
    rep["schema_version"] = kReportSchemaVersion;
    rep["command"] = "verify-example";
    rep["config"] = config_echo(cfg);
    rep["result"] = verify_log_example(mu, *grid);
    out.report = rep;
    return out;
}

inline RunOutput run_check_estimates(const Config& cfg) {
    RunOutput out;
    const int m = static_cast<int>(cfg.get_int_or("problem.m", 2));
    const Nonlinearity f = nonlinearity_from_config(cfg);
    const Weight a = weight_from_config(cfg);
    GridPtr grid = grid_from_config(cfg, 2 * m);

    json rep;
    rep["schema_version"] = kReportSchemaVersion;
    rep["command"] = "check-estimates";
    rep["config"] = config_echo(cfg);
    rep["growth"] = classify_growth(f);
    rep["beta_vanishing"] = beta_vanishing_check(f, a, cfg.get_double_or("check.beta", 1.0), *grid);
    rep["alpha_removability"] =
        alpha_removability_check(f, a, cfg.get_double_or("check.alpha", 1.0), *grid);

    // Lin-estimate probe: h solved from a unit-L1 positive rhs concentrated
    // near the origin, scanned over delta (given in units of pi^2)
    {
        const double support = cfg.get_double_or("check.rhs_support", 0.15 * grid->radius);
        RadialField bump = RadialField::from_function(grid, [&](double r) {
            const double x = r / support;
            return x < 1.0 ? (1.0 - x * x) * (1.0 - x * x) : 0.0;
        });
        const double l1 = ball_integral_values(*grid, bump.values()).value;
        for (double& v : bump.regular) v /= l1;
        const auto h = navier_solve(m, bump, ChargeVector(static_cast<std::size_t>(m), 0.0), grid);
        std::vector<double> deltas;
        if (cfg.has("check.delta_pi2_list"))
            deltas = cfg.get_double_list("check.delta_pi2_list");
        else
            deltas = {8.0, 16.0, 24.0};
        json scans = json::array();
        const double pi2 = std::numbers::pi * std::numbers::pi;
        for (double d : deltas) {
            json entry;
            entry["delta_over_pi2"] = d;
            entry["result"] = exp_integrability_check(h.u, 1.0, d * pi2, m);
            scans.push_back(entry);
        }
        rep["exp_integrability"] = scans;
    }

    // bootstrap: on an ingested field when given, else on the trivial
    // uncharged fixed point u = 0
    {
        RadialField u = cfg.has("input.field_csv") ? read_field_csv(cfg.get_string("input.field_csv"), 2 * m)
                                                   : RadialField::zero(grid);
        rep["regularity_bootstrap"] = regularity_bootstrap_check(u, f, a);
    }

    out.report = rep;
    return out;
}

inline RunOutput run_property_suite(const Config& cfg) {
    RunOutput out;
    const int m = static_cast<int>(cfg.get_int_or("problem.m", 2));
    GridPtr grid = grid_from_config(cfg, 2 * m);
    const int trials = static_cast<int>(cfg.get_int_or("suite.trials", 100));
    const auto res = comparison_property_check(trials, grid, cfg.get_seed_or("seed", 0));
    json rep;
    rep["schema_version"] = kReportSchemaVersion;
    rep["command"] = "property-suite";
    rep["config"] = config_echo(cfg);
    rep["result"] = res;
    out.report = rep;
    out.exit_code = res.all_pass() ? exit_ok : exit_numerical_failure;
    return out;
}

}  // namespace detail

/// Execute the command named in the config; returns the report and exit code.
/// Configuration problems raise ConfigError, numerical ones NumericalError;
/// callers map those to exit codes 2 and 5.
inline RunOutput run(const Config& cfg) {
    const std::string command = cfg.get_string("command");
    RunOutput out;
    if (command == "solve")
        out = detail::run_solve(cfg);
    else if (command == "classify")
        out = detail::run_classify(cfg);
    else if (command == "charges")
        out = detail::run_charges(cfg);
    else if (command == "verify-example")
        out = detail::run_verify_example(cfg);
    else if (command == "check-estimates")
        out = detail::run_check_estimates(cfg);
    else if (command == "property-suite")
        out = detail::run_property_suite(cfg);
    else
        throw ConfigError("unknown command: " + command);

    const auto path = detail::out_path(cfg, cfg.get_string_or("output.report", "report.json"));
    write_json_file(path, out.report);
    out.files_written.push_back(path);
    return out;
}

}  // namespace polyrad
