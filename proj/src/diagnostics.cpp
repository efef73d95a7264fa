#include "overset/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "overset/spatial.hpp"

namespace overset {

double overlap_weight(const OversetGeometry1D& geom, const GridField& field, int cell) {
    const double x = field.center(cell);
    const bool in_overlap = x >= geom.b && x <= geom.c;
    if (!in_overlap) return 1.0;
    return field.domain_id == DomainId::U ? 1.0 - geom.eta : geom.eta;
}

double total_entropy(const ConservationLawSystem& sys, const OversetGeometry1D& geom,
                     const GridField& u, const GridField& v) {
    double total = 0.0;
    for (int j = 0; j < u.n_cells; ++j)
        total += overlap_weight(geom, u, j) * sys.entropy(u.values[static_cast<std::size_t>(j)]) *
                 u.dx;
    for (int k = 0; k < v.n_cells; ++k)
        total += overlap_weight(geom, v, k) * sys.entropy(v.values[static_cast<std::size_t>(k)]) *
                 v.dx;
    return total;
}

State conserved_totals(const ConservationLawSystem& sys, const OversetGeometry1D& geom,
                       const GridField& u, const GridField& v) {
    State total = State::zero(sys.num_components());
    for (int j = 0; j < u.n_cells; ++j)
        total += (overlap_weight(geom, u, j) * u.dx) * u.values[static_cast<std::size_t>(j)];
    for (int k = 0; k < v.n_cells; ++k)
        total += (overlap_weight(geom, v, k) * v.dx) * v.values[static_cast<std::size_t>(k)];
    return total;
}

namespace {

struct MeasuredRates {
    State conserved;
    double entropy = 0.0;
};

MeasuredRates measured_rates(const ConservationLawSystem& sys, const OversetGeometry1D& geom,
                             const GridField& field, const std::vector<State>& deriv) {
    MeasuredRates rates;
    rates.conserved = State::zero(sys.num_components());
    for (int j = 0; j < field.n_cells; ++j) {
        const double weight = overlap_weight(geom, field, j) * field.dx;
        const State& dq = deriv[static_cast<std::size_t>(j)];
        rates.conserved += weight * dq;
        rates.entropy +=
            weight * sys.entropy_variables(field.values[static_cast<std::size_t>(j)]).dot(dq);
    }
    return rates;
}

}  // namespace

BudgetLedger make_ledger_entry(const ConservationLawSystem& sys, const OversetGeometry1D& geom,
                               const GridField& u, const GridField& v,
                               const std::vector<State>& du, const std::vector<State>& dv,
                               const AssemblyReport& report, double t) {
    BudgetLedger entry;
    entry.t = t;
    entry.S_bar = total_entropy(sys, geom, u, v);
    entry.conserved_totals = conserved_totals(sys, geom, u, v);
    entry.B_b = report.B_b;
    entry.B_c = report.B_c;
    entry.D = report.D;

    const MeasuredRates rate_u = measured_rates(sys, geom, u, du);
    const MeasuredRates rate_v = measured_rates(sys, geom, v, dv);

    const State predicted_cons = report.flux_a - report.flux_d;
    const State measured_cons = rate_u.conserved + rate_v.conserved;
    entry.conservation_rate_residual = State::zero(sys.num_components());
    for (int i = 0; i < sys.num_components(); ++i)
        entry.conservation_rate_residual[i] = std::abs(measured_cons[i] - predicted_cons[i]);

    const double predicted_ent = report.g_a - report.g_d - report.B_b - report.B_c - report.D;
    entry.entropy_rate_residual = std::abs(rate_u.entropy + rate_v.entropy - predicted_ent);
    return entry;
}

BudgetLedger verify_semidiscrete_identities(const ConservationLawSystem& sys,
                                            const SemiDiscreteRHS& rhs, const GridField& u,
                                            const GridField& v, double t) {
    std::vector<State> du, dv;
    AssemblyReport report;
    overset_rhs(sys, rhs, u, v, t, du, dv, &report);
    return make_ledger_entry(sys, rhs.geom, u, v, du, dv, report, t);
}

BudgetLedger verify_semidiscrete_identities_single(const ConservationLawSystem& sys,
                                                   const BoundaryCondition& bc,
                                                   const GridField& field, double t) {
    std::vector<State> dq;
    AssemblyReport report;
    single_domain_rhs(sys, bc, field, t, dq, &report);

    BudgetLedger entry;
    entry.t = t;
    entry.S_bar = 0.0;
    entry.conserved_totals = State::zero(sys.num_components());
    double entropy_rate = 0.0;
    State cons_rate = State::zero(sys.num_components());
    for (int j = 0; j < field.n_cells; ++j) {
        const State& q = field.values[static_cast<std::size_t>(j)];
        entry.S_bar += sys.entropy(q) * field.dx;
        entry.conserved_totals += field.dx * q;
        cons_rate += field.dx * dq[static_cast<std::size_t>(j)];
        entropy_rate += field.dx * sys.entropy_variables(q).dot(dq[static_cast<std::size_t>(j)]);
    }
    const State predicted_cons = report.flux_a - report.flux_d;
    entry.conservation_rate_residual = State::zero(sys.num_components());
    for (int i = 0; i < sys.num_components(); ++i)
        entry.conservation_rate_residual[i] = std::abs(cons_rate[i] - predicted_cons[i]);
    entry.entropy_rate_residual = std::abs(entropy_rate - (report.g_a - report.g_d));
    return entry;
}

void emit_ledger(const std::vector<BudgetLedger>& series, const std::string& path) {
    std::FILE* file = std::fopen(path.c_str(), "wb");
    if (!file) throw std::runtime_error("cannot open ledger file for writing: " + path);

    const int p = series.empty() ? 1 : series.front().conserved_totals.size();
    std::fputs("t,S_bar", file);
    for (int i = 0; i < p; ++i) std::fprintf(file, ",conserved_%d", i);
    std::fputs(",B_b,B_c,D,entropy_rate_residual", file);
    for (int i = 0; i < p; ++i) std::fprintf(file, ",conservation_rate_residual_%d", i);
    std::fputc('\n', file);

    for (const BudgetLedger& row : series) {
        std::fprintf(file, "%.17g,%.17g", row.t, row.S_bar);
        for (int i = 0; i < p; ++i) std::fprintf(file, ",%.17g", row.conserved_totals[i]);
        std::fprintf(file, ",%.17g,%.17g,%.17g,%.17g", row.B_b, row.B_c, row.D,
                     row.entropy_rate_residual);
        for (int i = 0; i < p; ++i)
            std::fprintf(file, ",%.17g", row.conservation_rate_residual[i]);
        std::fputc('\n', file);
    }
    if (std::fclose(file) != 0) throw std::runtime_error("failed to close ledger file: " + path);
}

}  // namespace overset
