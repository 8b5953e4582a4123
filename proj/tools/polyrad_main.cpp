#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "polyrad/polyrad.hpp"

namespace {

constexpr const char* kFooter = R"(Commands (config key `command`):
  solve           barrier + monotone iteration for the charged problem
  classify        growth classification and charge verdicts for f
  charges         asymptotic charge fit of a dumped field (input.field_csv)
  verify-example  closed-form log-profile identity residual
  check-estimates divergence probes and exponential-integrability scan
  property-suite  randomized maximum-principle trials

CSV field dumps have columns: r, u, neg_laplacian_u (full precision decimal);
iterate dumps append one u_k column per recorded iterate. Reports are JSON
with a schema_version field.

Exit codes: 0 ok, 2 config error, 3 hypothesis-validation failure,
4 solver divergence, 5 internal numerical failure.)";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polyrad: radial solver and verification harness for polyharmonic problems with point-mass sources"};
    app.footer(kFooter);

    std::string config_path;
    std::string out_dir;
    long long seed = -1;
    long long grid_n = -1;
    double tol = -1.0;

    app.add_option("--config", config_path, "configuration file (key = value lines)")->required();
    app.add_option("--out", out_dir, "output directory for reports and CSV dumps");
    app.add_option("--seed", seed, "override the config seed");
    app.add_option("--grid-n", grid_n, "override grid.n");
    app.add_option("--tol", tol, "override tol.iteration");

    CLI11_PARSE(app, argc, argv);

    try {
        auto cfg = polyrad::Config::parse_file(config_path);
        if (!out_dir.empty()) cfg.set("out_dir", out_dir);
        if (seed >= 0) cfg.set("seed", std::to_string(seed));
        if (grid_n > 0) cfg.set("grid.n", std::to_string(grid_n));
        if (tol > 0.0) cfg.set("tol.iteration", std::to_string(tol));

        const auto out = polyrad::run(cfg);
        for (const auto& f : out.files_written) std::printf("wrote %s\n", f.c_str());
        if (out.report.contains("status"))
            std::printf("status: %s\n", out.report["status"].get<std::string>().c_str());
        return out.exit_code;
    } catch (const polyrad::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return polyrad::exit_config_error;
    } catch (const polyrad::NumericalError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return polyrad::exit_numerical_failure;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return polyrad::exit_numerical_failure;
    }
}
