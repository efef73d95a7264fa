/// @file systems.hpp
/// @brief Conservation-law systems with their entropy machinery and
///        entropy-conservative two-point fluxes.
///
/// Each system bundles the physical flux f, the convex entropy pair (s, f_eps),
/// the entropy variables w = ds/dq, the flux potential psi = w^T f - f_eps and a
/// symmetric, consistent two-point flux f_ec(qL,qR) satisfying the jump relation
///
///     (w(qL) - w(qR))^T f_ec(qL,qR) = psi(qL) - psi(qR)
///
/// for arbitrary admissible state pairs. The jump relation, not any particular
/// closed form, is the correctness contract for f_ec; see jump_condition_residual.

#ifndef OVERSET_SYSTEMS_HPP
#define OVERSET_SYSTEMS_HPP

#include <map>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <utility>

#include "overset/state.hpp"

namespace overset {

/// Residual of the jump relation for one state pair, plus the scale used to
/// normalize it: max(|psi(qL)|, |psi(qR)|, 1).
struct JumpReport {
    State left;
    State right;
    double residual = 0.0;
    double relative_scale = 1.0;
};

/// Axis-aligned box of admissible states used by the seeded property tests.
struct AdmissibleBox {
    State lo;
    State hi;
};

class ConservationLawSystem {
public:
    virtual ~ConservationLawSystem() = default;

    virtual std::string_view name() const = 0;
    virtual int num_components() const = 0;

    /// System parameters as configured ("g" for shallow water, "gamma" for Euler).
    virtual std::map<std::string, double> parameters() const { return {}; }

    /// Throws AdmissibilityError naming the violated constraint.
    virtual void check_admissible(const State& q) const = 0;

    virtual State physical_flux(const State& q) const = 0;
    virtual double entropy(const State& q) const = 0;
    virtual double entropy_flux(const State& q) const = 0;
    virtual State entropy_variables(const State& q) const = 0;

    /// psi = w^T f - f_eps, in closed form per system.
    virtual double entropy_potential(const State& q) const = 0;

    /// Entropy-conservative two-point flux. Symmetric in its arguments
    /// (bitwise, for the implemented formulas) and exactly consistent:
    /// bitwise-equal arguments short-circuit to physical_flux.
    State ec_flux(const State& qL, const State& qR) const;

    /// |u| + sound speed (or the system's analogue) at q.
    virtual double max_wave_speed(const State& q) const = 0;

    /// Sampling box for randomized property tests, chosen well inside the
    /// admissible set so roundoff stays far below the test tolerances.
    virtual AdmissibleBox sample_box() const = 0;

    /// r = [[w]]^T f_ec - [[psi]] with [[x]] = x(qL) - x(qR).
    JumpReport jump_condition_residual(const State& qL, const State& qR) const;

    /// f_star_eps = {{w}}^T f_ec - {{psi}} with {{x}} = (x(qL)+x(qR))/2.
    /// Consistent with f_eps and symmetric by construction.
    double numerical_entropy_flux(const State& qL, const State& qR) const;

    /// Uniform draw from sample_box().
    State sample_admissible(std::mt19937_64& rng) const;

protected:
    virtual State ec_flux_distinct(const State& qL, const State& qR) const = 0;
};

/// Factory keyed by system name: "burgers", "shallow_water" (parameter g,
/// default 9.81), "euler" (parameter gamma, default 1.4).
/// Unknown names or parameters throw ValidationError.
std::unique_ptr<ConservationLawSystem> make_system(
    const std::string& name, const std::map<std::string, double>& parameters = {});

}  // namespace overset

#endif
