#include "overset/timeint.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <string>

namespace overset {

void IntegratorConfig::validate() const {
    if (!(t_start >= 0.0)) throw ValidationError("t_start must be non-negative");
    if (!(t_final > t_start)) throw ValidationError("t_final must exceed t_start");
    if (fixed_dt) {
        if (!(*fixed_dt > 0.0)) throw ValidationError("fixed_dt must be positive");
    } else {
        if (!(cfl > 0.0 && cfl <= 1.0)) throw ValidationError("cfl must lie in (0,1]");
    }
}

namespace {

double max_speed(const ConservationLawSystem& sys, const GridField& field) {
    double speed = 0.0;
    for (const State& q : field.values) speed = std::max(speed, sys.max_wave_speed(q));
    return speed;
}

using Values = std::vector<State>;

void set_axpy(Values& out, const Values& base, double s, const Values& k) {
    for (std::size_t j = 0; j < base.size(); ++j) out[j] = base[j] + s * k[j];
}

void set_axpy2(Values& out, const Values& base, double s1, const Values& k1, double s2,
               const Values& k2) {
    for (std::size_t j = 0; j < base.size(); ++j) out[j] = base[j] + s1 * k1[j] + s2 * k2[j];
}

struct StageBuffers {
    Values k1u, k1v, k2u, k2v, k3u, k3v, k4u, k4v;
};

/// Advances one step of the coupled (u,v) bundle; k1 is already evaluated.
template <class Eval>
void coupled_step(IntegratorConfig::Method method, Eval&& eval, GridField& u, GridField& v,
                  GridField& su, GridField& sv, StageBuffers& buf, double t, double dt) {
    using Method = IntegratorConfig::Method;
    if (method == Method::ssprk3) {
        set_axpy(su.values, u.values, dt, buf.k1u);
        set_axpy(sv.values, v.values, dt, buf.k1v);
        eval(su, sv, t + dt, buf.k2u, buf.k2v);

        set_axpy2(su.values, u.values, 0.25 * dt, buf.k1u, 0.25 * dt, buf.k2u);
        set_axpy2(sv.values, v.values, 0.25 * dt, buf.k1v, 0.25 * dt, buf.k2v);
        eval(su, sv, t + 0.5 * dt, buf.k3u, buf.k3v);

        const double w1 = dt / 6.0, w3 = 4.0 * dt / 6.0;
        for (std::size_t j = 0; j < u.values.size(); ++j)
            u.values[j] += w1 * buf.k1u[j] + w1 * buf.k2u[j] + w3 * buf.k3u[j];
        for (std::size_t j = 0; j < v.values.size(); ++j)
            v.values[j] += w1 * buf.k1v[j] + w1 * buf.k2v[j] + w3 * buf.k3v[j];
        return;
    }

    // classical rk4
    set_axpy(su.values, u.values, 0.5 * dt, buf.k1u);
    set_axpy(sv.values, v.values, 0.5 * dt, buf.k1v);
    eval(su, sv, t + 0.5 * dt, buf.k2u, buf.k2v);

    set_axpy(su.values, u.values, 0.5 * dt, buf.k2u);
    set_axpy(sv.values, v.values, 0.5 * dt, buf.k2v);
    eval(su, sv, t + 0.5 * dt, buf.k3u, buf.k3v);

    set_axpy(su.values, u.values, dt, buf.k3u);
    set_axpy(sv.values, v.values, dt, buf.k3v);
    eval(su, sv, t + dt, buf.k4u, buf.k4v);

    const double w1 = dt / 6.0, w2 = dt / 3.0;
    for (std::size_t j = 0; j < u.values.size(); ++j)
        u.values[j] += w1 * buf.k1u[j] + w2 * buf.k2u[j] + w2 * buf.k3u[j] + w1 * buf.k4u[j];
    for (std::size_t j = 0; j < v.values.size(); ++j)
        v.values[j] += w1 * buf.k1v[j] + w2 * buf.k2v[j] + w2 * buf.k3v[j] + w1 * buf.k4v[j];
}

}  // namespace

double stable_dt(const ConservationLawSystem& sys, const GridField& u, const GridField& v,
                 double cfl) {
    const double speed = std::max(max_speed(sys, u), max_speed(sys, v));
    if (!(speed > 0.0))
        throw ValidationError("all wave speeds vanish; a fixed_dt must be specified");
    return cfl * std::min(u.dx, v.dx) / speed;
}

double stable_dt(const ConservationLawSystem& sys, const GridField& field, double cfl) {
    const double speed = max_speed(sys, field);
    if (!(speed > 0.0))
        throw ValidationError("all wave speeds vanish; a fixed_dt must be specified");
    return cfl * field.dx / speed;
}

int advance(const ConservationLawSystem& sys, SemiDiscreteRHS& rhs, const IntegratorConfig& cfg,
            const StepCallback& on_step) {
    cfg.validate();

    auto eval = [&](const GridField& gu, const GridField& gv, double t, Values& ou, Values& ov,
                    AssemblyReport* report = nullptr) {
        try {
            overset_rhs(sys, rhs, gu, gv, t, ou, ov, report);
        } catch (const AdmissibilityError& err) {
            char when[32];
            std::snprintf(when, sizeof when, "t=%.8g: ", t);
            throw AdmissibilityError(when + std::string(err.what()));
        }
    };

    GridField su = rhs.u, sv = rhs.v;  // stage states
    StageBuffers buf;
    AssemblyReport report;
    int steps = 0;
    double t = cfg.t_start;

    while (true) {
        eval(rhs.u, rhs.v, t, buf.k1u, buf.k1v, &report);
        if (on_step)
            on_step(make_ledger_entry(sys, rhs.geom, rhs.u, rhs.v, buf.k1u, buf.k1v, report, t));
        if (t >= cfg.t_final) break;

        double dt = cfg.fixed_dt ? *cfg.fixed_dt : stable_dt(sys, rhs.u, rhs.v, cfg.cfl);
        bool final_step = false;
        if (t + dt >= cfg.t_final) {
            dt = cfg.t_final - t;
            final_step = true;
        }
        coupled_step(cfg.method, eval, rhs.u, rhs.v, su, sv, buf, t, dt);
        t = final_step ? cfg.t_final : t + dt;
        ++steps;
    }
    return steps;
}

int advance_single(const ConservationLawSystem& sys, const BoundaryCondition& bc,
                   GridField& field, const IntegratorConfig& cfg, const StepCallback& on_step) {
    cfg.validate();

    auto eval = [&](const GridField& g, double t, Values& out, AssemblyReport* report = nullptr) {
        try {
            single_domain_rhs(sys, bc, g, t, out, report);
        } catch (const AdmissibilityError& err) {
            char when[32];
            std::snprintf(when, sizeof when, "t=%.8g: ", t);
            throw AdmissibilityError(when + std::string(err.what()));
        }
    };

    // reuse the coupled stepper with an inert second grid
    GridField dummy = field;
    dummy.values.assign(1, field.values.front());
    auto eval_pair = [&](const GridField& g, const GridField&, double t, Values& out,
                         Values& out_dummy) {
        eval(g, t, out);
        out_dummy.assign(1, State::zero(sys.num_components()));
    };

    GridField sf = field, sdummy = dummy;
    StageBuffers buf;
    AssemblyReport report;
    int steps = 0;
    double t = cfg.t_start;
    Values dq;
    while (true) {
        eval(field, t, dq, &report);
        if (on_step) {
            BudgetLedger entry;
            entry.t = t;
            entry.conserved_totals = State::zero(sys.num_components());
            entry.conservation_rate_residual = State::zero(sys.num_components());
            double ent_rate = 0.0;
            State cons_rate = State::zero(sys.num_components());
            for (int j = 0; j < field.n_cells; ++j) {
                const State& q = field.values[static_cast<std::size_t>(j)];
                entry.S_bar += sys.entropy(q) * field.dx;
                entry.conserved_totals += field.dx * q;
                cons_rate += field.dx * dq[static_cast<std::size_t>(j)];
                ent_rate +=
                    field.dx * sys.entropy_variables(q).dot(dq[static_cast<std::size_t>(j)]);
            }
            const State pred = report.flux_a - report.flux_d;
            for (int i = 0; i < sys.num_components(); ++i)
                entry.conservation_rate_residual[i] = std::abs(cons_rate[i] - pred[i]);
            entry.entropy_rate_residual = std::abs(ent_rate - (report.g_a - report.g_d));
            on_step(entry);
        }
        if (t >= cfg.t_final) break;

        double dt = cfg.fixed_dt ? *cfg.fixed_dt : stable_dt(sys, field, cfg.cfl);
        bool final_step = false;
        if (t + dt >= cfg.t_final) {
            dt = cfg.t_final - t;
            final_step = true;
        }
        buf.k1u = dq;
        buf.k1v.assign(1, State::zero(sys.num_components()));
        coupled_step(cfg.method, eval_pair, field, dummy, sf, sdummy, buf, t, dt);
        t = final_step ? cfg.t_final : t + dt;
        ++steps;
    }
    return steps;
}

namespace detail {

void rk_step(IntegratorConfig::Method method, std::vector<double>& y, double t, double dt,
             const FlatRhs& f) {
    const std::size_t n = y.size();
    auto axpy = [&](const std::vector<double>& base, double s, const std::vector<double>& k) {
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = base[i] + s * k[i];
        return out;
    };

    if (method == IntegratorConfig::Method::ssprk3) {
        const auto k1 = f(y, t);
        const auto k2 = f(axpy(y, dt, k1), t + dt);
        std::vector<double> mid(n);
        for (std::size_t i = 0; i < n; ++i) mid[i] = y[i] + 0.25 * dt * (k1[i] + k2[i]);
        const auto k3 = f(mid, t + 0.5 * dt);
        for (std::size_t i = 0; i < n; ++i)
            y[i] += dt / 6.0 * (k1[i] + k2[i] + 4.0 * k3[i]);
        return;
    }
    const auto k1 = f(y, t);
    const auto k2 = f(axpy(y, 0.5 * dt, k1), t + 0.5 * dt);
    const auto k3 = f(axpy(y, 0.5 * dt, k2), t + 0.5 * dt);
    const auto k4 = f(axpy(y, dt, k3), t + dt);
    for (std::size_t i = 0; i < n; ++i)
        y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

}  // namespace detail

}  // namespace overset
