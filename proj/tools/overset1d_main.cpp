/// @file overset1d_main.cpp
/// @brief Command-line driver: run, equivalence, convergence, verify-fluxes.
///
/// Exit codes: 0 success, 2 validation error, 3 admissibility abort, 4 I/O error.

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "overset/runner.hpp"

namespace {

int run_command(const std::string& config_path, const std::string& out_dir) {
    const overset::RunConfig config = overset::load_config(config_path);
    const std::string dir = out_dir.empty() ? config.output_dir : out_dir;
    const overset::RunSummary summary = overset::run(config, dir);
    std::printf("steps                        %d\n", summary.steps);
    std::printf("final t                      %.17g\n", summary.final_time);
    std::printf("final S_bar                  %.17g\n", summary.final_S_bar);
    std::printf("max entropy rate residual    %.3e\n", summary.max_entropy_rate_residual);
    std::printf("max conservation residual    %.3e\n", summary.max_conservation_rate_residual);
    for (const std::string& path : summary.files_written)
        std::printf("wrote %s\n", path.c_str());
    return 0;
}

int equivalence_command(const std::string& config_path) {
    const overset::RunConfig config = overset::load_config(config_path);
    const overset::EquivalenceReport report = overset::run_equivalence(config);
    std::printf("steps                        %d\n", report.steps);
    std::printf("max |overset - single|       %.3e\n", report.max_difference);
    return 0;
}

int convergence_command(const std::string& config_path, int levels) {
    const overset::RunConfig config = overset::load_config(config_path);
    const auto table = overset::run_convergence(config, levels);
    std::printf("%8s  %14s  %8s\n", "n_u", "L2 error", "order");
    for (const auto& row : table) {
        if (row.observed_order == 0.0)
            std::printf("%8d  %14.6e  %8s\n", row.n_u, row.error_l2, "-");
        else
            std::printf("%8d  %14.6e  %8.3f\n", row.n_u, row.error_l2, row.observed_order);
    }
    return 0;
}

int verify_fluxes_command(std::uint64_t seed) {
    const auto rows = overset::verify_fluxes(seed);
    bool ok = true;
    for (const auto& row : rows) {
        const bool pass = row.max_jump_residual < 1e-12 && row.max_consistency == 0.0 &&
                          row.max_asymmetry == 0.0;
        ok = ok && pass;
        std::printf("%-14s pairs=%d  jump=%.3e  consistency=%.3e  asymmetry=%.3e  [%s]\n",
                    row.system.c_str(), row.pairs, row.max_jump_residual, row.max_consistency,
                    row.max_asymmetry, pass ? "ok" : "FAIL");
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entropy-bounded overset-domain solver for 1D conservation laws"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 20240817;
    int levels = 4;

    CLI::App* cmd_run = app.add_subcommand("run", "run an overset simulation");
    cmd_run->add_option("--config", config_path, "config JSON path")->required();
    cmd_run->add_option("--out", out_dir, "output directory (default: config output.directory)");

    CLI::App* cmd_eq = app.add_subcommand(
        "equivalence", "run overset and single-domain side by side and compare");
    cmd_eq->add_option("--config", config_path, "config JSON path")->required();

    CLI::App* cmd_conv =
        app.add_subcommand("convergence", "grid refinement study against the exact solution");
    cmd_conv->add_option("--config", config_path, "config JSON path")->required();
    cmd_conv->add_option("--levels", levels, "refinement levels (default 4)");

    CLI::App* cmd_verify =
        app.add_subcommand("verify-fluxes", "seeded property suite for the two-point fluxes");
    cmd_verify->add_option("--seed", seed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_run->parsed()) return run_command(config_path, out_dir);
        if (cmd_eq->parsed()) return equivalence_command(config_path);
        if (cmd_conv->parsed()) return convergence_command(config_path, levels);
        if (cmd_verify->parsed()) return verify_fluxes_command(seed);
    } catch (const overset::ValidationError& err) {
        std::fprintf(stderr, "validation error: %s\n", err.what());
        return 2;
    } catch (const overset::AdmissibilityError& err) {
        std::fprintf(stderr, "admissibility abort: %s\n", err.what());
        return 3;
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 4;
    }
    return 0;
}
