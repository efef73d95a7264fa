/// @file timeint.hpp
/// @brief Explicit Runge-Kutta integration of the coupled semi-discrete system.
///
/// Both grids advance as one state bundle with a shared dt and stage schedule,
/// so cross-grid interpolation inside a stage always sees that stage's other
/// grid values. Integrators are in Butcher (increment) form: a zero RHS
/// reproduces the state bitwise.

#ifndef OVERSET_TIMEINT_HPP
#define OVERSET_TIMEINT_HPP

#include <functional>
#include <optional>
#include <vector>

#include "overset/diagnostics.hpp"
#include "overset/spatial.hpp"

namespace overset {

struct IntegratorConfig {
    enum class Method { ssprk3, rk4 };
    Method method = Method::ssprk3;
    double cfl = 0.5;        // used when fixed_dt is unset
    double t_start = 0.0;    // integration window is [t_start, t_final]
    double t_final = 0.0;    // last step clipped to land exactly on it
    std::optional<double> fixed_dt;

    void validate() const;
};

/// cfl * min(dx) / max cell wave speed over both grids.
/// Throws ValidationError when every wave speed is zero (demand fixed_dt).
double stable_dt(const ConservationLawSystem& sys, const GridField& u, const GridField& v,
                 double cfl);
double stable_dt(const ConservationLawSystem& sys, const GridField& field, double cfl);

using StepCallback = std::function<void(const BudgetLedger&)>;

/// Integrates rhs.u / rhs.v in place up to cfg.t_final.
/// on_step (optional) receives a BudgetLedger entry for the state at the start
/// of every step and one final entry at t_final; entries = steps + 1.
/// Admissibility loss aborts with time/domain/cell context.
int advance(const ConservationLawSystem& sys, SemiDiscreteRHS& rhs, const IntegratorConfig& cfg,
            const StepCallback& on_step = {});

/// Single-domain counterpart on one grid spanning [a,d].
int advance_single(const ConservationLawSystem& sys, const BoundaryCondition& bc,
                   GridField& field, const IntegratorConfig& cfg,
                   const StepCallback& on_step = {});

namespace detail {

/// One explicit RK step of y' = f(t, y) on flat double vectors; used by the
/// integrators and directly testable against scalar ODEs.
using FlatRhs = std::function<std::vector<double>(const std::vector<double>&, double)>;
void rk_step(IntegratorConfig::Method method, std::vector<double>& y, double t, double dt,
             const FlatRhs& f);

}  // namespace detail

}  // namespace overset

#endif
