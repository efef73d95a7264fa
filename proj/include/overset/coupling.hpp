/// @file coupling.hpp
/// @brief Interface penalty functions, beta weights, optional interior
///        penalties, and checkers for the conservation and entropy-budget
///        conditions.
///
/// Interface penalties (per coordinate component, 1D):
///
///     P_u(u,v) =  beta (f_ec(u,v) - f(u))
///     P_v(u,v) = -beta (f_ec(u,v) - f(v))
///
/// with beta = eta at x=b and (1-eta) at x=c. These satisfy
///
///     P_u + P_v + beta (f(u) - f(v))                  = 0   (conservation)
///     beta (f_eps(u) - f_eps(v)) + w_u.P_u + w_v.P_v  = 0   (entropy budget B)
///
/// identically; the checkers below return the residuals of these identities.
/// Optional dissipation enters either as a scalar kappa acting on
/// entropy-variable jumps at the interfaces, or as SPD matrix penalties at
/// points inside the overlap constrained by (1-eta) Sigma_u = eta Sigma_v.

#ifndef OVERSET_COUPLING_HPP
#define OVERSET_COUPLING_HPP

#include <utility>
#include <vector>

#include "overset/state.hpp"
#include "overset/systems.hpp"

namespace overset {

/// Interface identity: B is at x=b with outward normal -1, C at x=c with +1.
struct InterfaceSide {
    enum Which { B, C };
    Which which = B;

    double normal_sign() const { return which == B ? -1.0 : 1.0; }
};

/// 1D interface weight: eta at b, (1-eta) at c.
double beta(InterfaceSide side, double eta);

State penalty_u(const ConservationLawSystem& sys, InterfaceSide side, double eta,
                const State& q_u, const State& q_v);

State penalty_v(const ConservationLawSystem& sys, InterfaceSide side, double eta,
                const State& q_u, const State& q_v);

/// beta (f(q_u) - f(q_v)) + P_u + P_v; the zero vector when the penalties are
/// the entropy-conserving ones.
State conservation_residual(const ConservationLawSystem& sys, InterfaceSide side, double eta,
                            const State& q_u, const State& q_v);

/// B = beta (f_eps(q_u) - f_eps(q_v)) + w_u.P_u + w_v.P_v, with the optional
/// kappa dissipation included: B = kappa |w_u - w_v|^2 >= 0.
double entropy_budget_B(const ConservationLawSystem& sys, InterfaceSide side, double eta,
                        const State& q_u, const State& q_v, double kappa = 0.0);

/// Additions (to P_u, P_v) of the scalar interface dissipation:
/// (kappa (w_u - w_v), kappa (w_v - w_u)). Their sum is the zero vector, so
/// conservation is unaffected; the budget B gains kappa |w_u - w_v|^2.
std::pair<State, State> interface_dissipation_term(const ConservationLawSystem& sys,
                                                   double kappa, const State& q_u,
                                                   const State& q_v);

/// Interface and interior penalty configuration.
/// Construct via make_penalty_config so the coupling condition
/// (1-eta) Sigma_u^m = eta Sigma_v^m holds by construction.
struct PenaltyConfig {
    double eta = 0.5;
    double kappa = 0.0;                   // interface dissipation, >= 0
    std::vector<double> interior_points;  // x^m strictly inside (b,c); may be empty
    std::vector<SmallMatrix> sigma_u;     // per-point SPD matrices
    std::vector<SmallMatrix> sigma_v;     // derived: ((1-eta)/eta) Sigma_u

    int num_interior() const { return static_cast<int>(interior_points.size()); }

    /// Re-checks every invariant (eta range, kappa sign, SPD, coupling
    /// condition to 1e-14 per entry). Throws ValidationError.
    void validate(int num_components) const;
};

/// Builds a config with Sigma_u^m given and Sigma_v^m derived from the
/// coupling condition.
PenaltyConfig make_penalty_config(double eta, double kappa, std::vector<double> interior_points,
                                  std::vector<SmallMatrix> sigma_u);

/// Convenience: M equispaced interior points in (b,c) with Sigma_u = sigma*I.
PenaltyConfig make_penalty_config(double eta, double kappa, int num_points, double sigma,
                                  double b, double c, int num_components);

/// Interior penalty terms at point m: (Sigma_u^m (w_u - w_v), Sigma_v^m (w_v - w_u)).
/// Lifted into the containing cells with the 1/M factor by the spatial module.
std::pair<State, State> interior_penalty(const ConservationLawSystem& sys,
                                         const PenaltyConfig& cfg, int m, const State& q_u_at_xm,
                                         const State& q_v_at_xm);

/// P^m = (1-eta) w_u . Sigma_u^m (w_u - w_v) + eta w_v . Sigma_v^m (w_v - w_u),
/// the per-point contribution to the dissipation D; non-negative under the
/// coupling condition.
double interior_penalty_dissipation(const ConservationLawSystem& sys, const PenaltyConfig& cfg,
                                    int m, const State& q_u_at_xm, const State& q_v_at_xm);

}  // namespace overset

#endif
