#include "overset/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <stdexcept>

namespace overset {

namespace {

void fill_grid(GridField& field, const std::function<State(double)>& ic) {
    for (int j = 0; j < field.n_cells; ++j)
        field.values[static_cast<std::size_t>(j)] = ic(field.center(j));
}

BoundaryCondition make_bc(const RunConfig& config, const InitialCondition& ic) {
    BoundaryCondition bc;
    bc.kind = config.bc_kind;
    if (bc.kind == BoundaryCondition::Kind::dirichlet_exact) {
        if (!ic.reference)
            throw ValidationError("initial condition '" + config.ic_name +
                                  "' has no reference solution; dirichlet_exact is unavailable");
        bc.reference = ic.reference;
    }
    return bc;
}

SemiDiscreteRHS build_operator(const ConservationLawSystem& sys, const RunConfig& config,
                               const InitialCondition& ic) {
    auto [u, v] = build_grids(config.geometry, config.n_u, config.n_v);
    fill_grid(u, ic.at);
    fill_grid(v, ic.at);
    PenaltyConfig cfg =
        make_penalty_config(config.geometry.eta, config.kappa, config.interior_count,
                            config.sigma, config.geometry.b, config.geometry.c,
                            sys.num_components());
    return make_semidiscrete(sys, config.geometry, std::move(u), std::move(v), std::move(cfg),
                             config.interp, make_bc(config, ic));
}

void write_final_state(const GridField& field, const std::string& path) {
    std::FILE* file = std::fopen(path.c_str(), "wb");
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    const int p = field.values.empty() ? 1 : field.values.front().size();
    std::fputs("x", file);
    for (int i = 0; i < p; ++i) std::fprintf(file, ",q_%d", i);
    std::fputc('\n', file);
    for (int j = 0; j < field.n_cells; ++j) {
        std::fprintf(file, "%.17g", field.center(j));
        for (int i = 0; i < p; ++i)
            std::fprintf(file, ",%.17g", field.values[static_cast<std::size_t>(j)][i]);
        std::fputc('\n', file);
    }
    if (std::fclose(file) != 0) throw std::runtime_error("failed to close output file: " + path);
}

void require_aligned(const RunConfig& config, const GridField& u, const GridField& v) {
    if (config.interp.mode != InterpolationOperator::Mode::exact_node ||
        !grids_aligned(config.geometry, u, v))
        throw ValidationError(
            "equivalence requires exact_node mode with aligned grids: dx_u == dx_v and b, c on "
            "cell faces of both grids (choose n_u, n_v so (b-a)/dx and (c-b)/dx are integers)");
}

}  // namespace

RunSummary run(const RunConfig& config, const std::string& out_dir) {
    config.validate();
    const auto sys = make_system(config.system_name, config.system_params);
    const InitialCondition ic =
        make_initial_condition(*sys, config.ic_name, config.ic_params);
    SemiDiscreteRHS rhs = build_operator(*sys, config, ic);

    std::vector<BudgetLedger> series;
    int counter = 0;
    auto on_step = [&](const BudgetLedger& entry) {
        if (counter % config.output_cadence == 0 || entry.t >= config.integrator.t_final)
            series.push_back(entry);
        ++counter;
    };

    RunSummary summary;
    summary.steps = advance(*sys, rhs, config.integrator, on_step);
    summary.final_time = config.integrator.t_final;

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory: " + out_dir);

    const std::string ledger_path = out_dir + "/ledger.csv";
    const std::string u_path = out_dir + "/final_u.csv";
    const std::string v_path = out_dir + "/final_v.csv";
    emit_ledger(series, ledger_path);
    write_final_state(rhs.u, u_path);
    write_final_state(rhs.v, v_path);
    summary.files_written = {ledger_path, u_path, v_path};

    summary.final_S_bar = series.empty() ? 0.0 : series.back().S_bar;
    summary.min_D = series.empty() ? 0.0 : series.front().D;
    for (const BudgetLedger& entry : series) {
        summary.max_entropy_rate_residual =
            std::max(summary.max_entropy_rate_residual, entry.entropy_rate_residual);
        summary.max_conservation_rate_residual = std::max(
            summary.max_conservation_rate_residual, entry.conservation_rate_residual.norm_inf());
        summary.min_D = std::min(summary.min_D, entry.D);
    }
    return summary;
}

EquivalenceReport run_equivalence(const RunConfig& config) {
    config.validate();
    const auto sys = make_system(config.system_name, config.system_params);
    const InitialCondition ic =
        make_initial_condition(*sys, config.ic_name, config.ic_params);
    SemiDiscreteRHS rhs = build_operator(*sys, config, ic);
    require_aligned(config, rhs.u, rhs.v);

    // single-domain grid on [a,d] whose cells coincide with both overset grids
    const OversetGeometry1D& geom = config.geometry;
    const double dx = rhs.u.dx;
    const int n_single = static_cast<int>(std::llround((geom.d - geom.a) / dx));
    GridField single;
    single.domain_id = DomainId::U;
    single.x_left = geom.a;
    single.x_right = geom.d;
    single.n_cells = n_single;
    single.dx = (geom.d - geom.a) / n_single;
    single.values.resize(static_cast<std::size_t>(n_single));
    fill_grid(single, ic.at);

    const int offset_v = static_cast<int>(std::llround((geom.b - geom.a) / dx));
    const BoundaryCondition bc = make_bc(config, ic);

    // lockstep march with a shared dt sequence
    IntegratorConfig integ = config.integrator;
    EquivalenceReport report;
    double t = 0.0;
    auto compare = [&]() {
        for (int j = 0; j < rhs.u.n_cells; ++j) {
            const State diff = rhs.u.values[static_cast<std::size_t>(j)] -
                               single.values[static_cast<std::size_t>(j)];
            report.max_difference = std::max(report.max_difference, diff.norm_inf());
        }
        for (int k = 0; k < rhs.v.n_cells; ++k) {
            const State diff = rhs.v.values[static_cast<std::size_t>(k)] -
                               single.values[static_cast<std::size_t>(k + offset_v)];
            report.max_difference = std::max(report.max_difference, diff.norm_inf());
        }
    };
    compare();
    while (t < integ.t_final) {
        double dt = integ.fixed_dt ? *integ.fixed_dt : stable_dt(*sys, rhs.u, rhs.v, integ.cfl);
        dt = std::min(dt, integ.t_final - t);
        IntegratorConfig one_step = integ;
        one_step.t_start = t;
        one_step.t_final = t + dt;
        one_step.fixed_dt = dt;
        advance(*sys, rhs, one_step);
        advance_single(*sys, bc, single, one_step);
        t += dt;
        compare();
        ++report.steps;
        if (report.max_difference > 1e6) break;  // diverged; stop early
    }
    return report;
}

std::vector<ConvergenceRow> run_convergence(const RunConfig& config, int levels) {
    config.validate();
    if (levels < 1) throw ValidationError("convergence study needs at least one level");
    const auto sys = make_system(config.system_name, config.system_params);
    const InitialCondition ic =
        make_initial_condition(*sys, config.ic_name, config.ic_params);
    if (!ic.reference)
        throw ValidationError("convergence study requires an initial condition with an exact "
                              "reference solution");

    std::vector<ConvergenceRow> table;
    for (int level = 0; level < levels; ++level) {
        RunConfig refined = config;
        refined.n_u = config.n_u << level;
        refined.n_v = config.n_v << level;
        SemiDiscreteRHS rhs = build_operator(*sys, refined, ic);
        advance(*sys, rhs, refined.integrator);
        ConvergenceRow row;
        row.n_u = refined.n_u;
        row.error_l2 = l2_error(*sys, refined.geometry, rhs.u, rhs.v, ic.reference,
                                refined.integrator.t_final);
        if (!table.empty())
            row.observed_order = std::log2(table.back().error_l2 / row.error_l2);
        table.push_back(row);
    }
    return table;
}

std::vector<FluxCheckRow> verify_fluxes(std::uint64_t seed, int pairs_per_system) {
    std::vector<FluxCheckRow> rows;
    for (const char* name : {"burgers", "shallow_water", "euler"}) {
        const auto sys = make_system(name);
        std::mt19937_64 rng(seed);
        FluxCheckRow row;
        row.system = name;
        row.pairs = pairs_per_system;
        for (int i = 0; i < pairs_per_system; ++i) {
            const State a = sys->sample_admissible(rng);
            const State b = sys->sample_admissible(rng);
            const JumpReport jump = sys->jump_condition_residual(a, b);
            row.max_jump_residual =
                std::max(row.max_jump_residual, std::abs(jump.residual) / jump.relative_scale);
            row.max_consistency = std::max(
                row.max_consistency, (sys->ec_flux(a, a) - sys->physical_flux(a)).norm_inf());
            row.max_asymmetry = std::max(
                row.max_asymmetry, (sys->ec_flux(a, b) - sys->ec_flux(b, a)).norm_inf());
        }
        rows.push_back(row);
    }
    return rows;
}

double l2_error(const ConservationLawSystem&, const OversetGeometry1D& geom,
                const GridField& u, const GridField& v,
                const std::function<State(double, double)>& reference, double t) {
    double total = 0.0;
    for (int j = 0; j < u.n_cells; ++j) {
        const State diff =
            u.values[static_cast<std::size_t>(j)] - reference(u.center(j), t);
        total += overlap_weight(geom, u, j) * u.dx * diff.dot(diff);
    }
    for (int k = 0; k < v.n_cells; ++k) {
        const State diff =
            v.values[static_cast<std::size_t>(k)] - reference(v.center(k), t);
        total += overlap_weight(geom, v, k) * v.dx * diff.dot(diff);
    }
    return std::sqrt(total);
}

}  // namespace overset
