#include "overset/coupling.hpp"

#include <cmath>
#include <string>

namespace overset {

double beta(InterfaceSide side, double eta) {
    if (!(eta > 0.0 && eta < 1.0)) throw ValidationError("eta must lie in (0,1)");
    return side.which == InterfaceSide::B ? eta : 1.0 - eta;
}

State penalty_u(const ConservationLawSystem& sys, InterfaceSide side, double eta,
                const State& q_u, const State& q_v) {
    const double b = beta(side, eta);
    return b * (sys.ec_flux(q_u, q_v) - sys.physical_flux(q_u));
}

State penalty_v(const ConservationLawSystem& sys, InterfaceSide side, double eta,
                const State& q_u, const State& q_v) {
    const double b = beta(side, eta);
    return -1.0 * b * (sys.ec_flux(q_u, q_v) - sys.physical_flux(q_v));
}

State conservation_residual(const ConservationLawSystem& sys, InterfaceSide side, double eta,
                            const State& q_u, const State& q_v) {
    const double b = beta(side, eta);
    const State sum = penalty_u(sys, side, eta, q_u, q_v) + penalty_v(sys, side, eta, q_u, q_v);
    return b * (sys.physical_flux(q_u) - sys.physical_flux(q_v)) + sum;
}

double entropy_budget_B(const ConservationLawSystem& sys, InterfaceSide side, double eta,
                        const State& q_u, const State& q_v, double kappa) {
    const double b = beta(side, eta);
    State p_u = penalty_u(sys, side, eta, q_u, q_v);
    State p_v = penalty_v(sys, side, eta, q_u, q_v);
    if (kappa != 0.0) {
        auto [d_u, d_v] = interface_dissipation_term(sys, kappa, q_u, q_v);
        p_u += d_u;
        p_v += d_v;
    }
    const State w_u = sys.entropy_variables(q_u);
    const State w_v = sys.entropy_variables(q_v);
    return b * (sys.entropy_flux(q_u) - sys.entropy_flux(q_v)) + w_u.dot(p_u) + w_v.dot(p_v);
}

std::pair<State, State> interface_dissipation_term(const ConservationLawSystem& sys,
                                                   double kappa, const State& q_u,
                                                   const State& q_v) {
    if (kappa < 0.0) throw ValidationError("kappa must be non-negative");
    const State jump = sys.entropy_variables(q_u) - sys.entropy_variables(q_v);
    return {kappa * jump, -kappa * jump};
}

void PenaltyConfig::validate(int num_components) const {
    if (!(eta > 0.0 && eta < 1.0)) throw ValidationError("eta must lie in (0,1)");
    if (kappa < 0.0) throw ValidationError("kappa must be non-negative");
    if (sigma_u.size() != interior_points.size() || sigma_v.size() != interior_points.size())
        throw ValidationError("one Sigma_u/Sigma_v pair required per interior point");
    for (std::size_t m = 0; m < interior_points.size(); ++m) {
        if (sigma_u[m].size() != num_components || sigma_v[m].size() != num_components)
            throw ValidationError("penalty matrix size does not match system components");
        if (!sigma_u[m].is_spd() || !sigma_v[m].is_spd())
            throw ValidationError("penalty matrices must be symmetric positive definite");
        for (int i = 0; i < num_components; ++i)
            for (int j = 0; j < num_components; ++j) {
                const double lhs = (1.0 - eta) * sigma_u[m](i, j);
                const double rhs = eta * sigma_v[m](i, j);
                if (std::abs(lhs - rhs) > 1e-14 * std::max(1.0, std::abs(lhs)))
                    throw ValidationError(
                        "coupling condition (1-eta) Sigma_u = eta Sigma_v violated at point " +
                        std::to_string(m));
            }
    }
}

PenaltyConfig make_penalty_config(double eta, double kappa, std::vector<double> interior_points,
                                  std::vector<SmallMatrix> sigma_u) {
    PenaltyConfig cfg;
    cfg.eta = eta;
    cfg.kappa = kappa;
    cfg.interior_points = std::move(interior_points);
    cfg.sigma_u = std::move(sigma_u);
    if (cfg.sigma_u.size() != cfg.interior_points.size())
        throw ValidationError("one Sigma_u required per interior point");
    cfg.sigma_v.reserve(cfg.sigma_u.size());
    for (const auto& su : cfg.sigma_u) cfg.sigma_v.push_back(su.scaled((1.0 - eta) / eta));
    if (!cfg.sigma_u.empty()) cfg.validate(cfg.sigma_u.front().size());
    if (!(cfg.eta > 0.0 && cfg.eta < 1.0)) throw ValidationError("eta must lie in (0,1)");
    if (cfg.kappa < 0.0) throw ValidationError("kappa must be non-negative");
    return cfg;
}

PenaltyConfig make_penalty_config(double eta, double kappa, int num_points, double sigma,
                                  double b, double c, int num_components) {
    if (num_points < 0) throw ValidationError("number of interior points must be >= 0");
    if (num_points > 0 && !(sigma > 0.0))
        throw ValidationError("interior penalty strength sigma must be positive");
    std::vector<double> points;
    std::vector<SmallMatrix> mats;
    points.reserve(static_cast<std::size_t>(num_points));
    for (int m = 1; m <= num_points; ++m) {
        points.push_back(b + m * (c - b) / (num_points + 1));
        mats.push_back(SmallMatrix::identity(num_components, sigma));
    }
    return make_penalty_config(eta, kappa, std::move(points), std::move(mats));
}

std::pair<State, State> interior_penalty(const ConservationLawSystem& sys,
                                         const PenaltyConfig& cfg, int m, const State& q_u_at_xm,
                                         const State& q_v_at_xm) {
    const State w_u = sys.entropy_variables(q_u_at_xm);
    const State w_v = sys.entropy_variables(q_v_at_xm);
    const State jump = w_u - w_v;
    return {cfg.sigma_u[static_cast<std::size_t>(m)].apply(jump),
            cfg.sigma_v[static_cast<std::size_t>(m)].apply(-1.0 * jump)};
}

double interior_penalty_dissipation(const ConservationLawSystem& sys, const PenaltyConfig& cfg,
                                    int m, const State& q_u_at_xm, const State& q_v_at_xm) {
    const State w_u = sys.entropy_variables(q_u_at_xm);
    const State w_v = sys.entropy_variables(q_v_at_xm);
    auto [term_u, term_v] = interior_penalty(sys, cfg, m, q_u_at_xm, q_v_at_xm);
    return (1.0 - cfg.eta) * w_u.dot(term_u) + cfg.eta * w_v.dot(term_v);
}

}  // namespace overset
