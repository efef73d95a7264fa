/// @file spatial.hpp
/// @brief Semi-discrete right-hand side: entropy-conservative finite-volume
///        interior update, discrete lifting of interface/interior penalties,
///        and physical boundary treatment.
///
/// Interior update per grid:  dq_j/dt = -(f_ec_{j+1/2} - f_ec_{j-1/2})/dx.
///
/// Interface coupling (interfaces at x=b and x=c):
///  * each grid's own artificial boundary face uses the two-point flux
///    f_ec(own boundary cell, other grid's interpolant at the ghost center),
///  * the grid for which the interface is interior receives the penalty
///    lifted into the face-adjacent cell: at b, cell J (last center <= b) gets
///    -eta (f_ec(u_J, v~) - f_ec(u_J, u_{J+1}))/dx with v~ the other grid's
///    interpolant at cell J+1's center; mirrored at c with weight (1-eta).
///
/// In aligned exact_node mode (shared overlap lattice) this assembly makes the
/// eta-weighted semi-discrete conservation and entropy identities hold to
/// roundoff; the lifted amount reduces to the interface penalty
/// beta (f_ec(u(b),v(b)) - f(u(b))) as dx -> 0.

#ifndef OVERSET_SPATIAL_HPP
#define OVERSET_SPATIAL_HPP

#include <functional>
#include <vector>

#include "overset/coupling.hpp"
#include "overset/geometry.hpp"
#include "overset/state.hpp"
#include "overset/systems.hpp"

namespace overset {

struct BoundaryCondition {
    enum class Kind { dirichlet_exact, reflective_none };
    Kind kind = Kind::reflective_none;
    /// Reference solution omega_ref(x, t); required for dirichlet_exact.
    std::function<State(double, double)> reference;
};

/// Per-evaluation record of the boundary fluxes and interface/interior
/// dissipation terms, used by the diagnostics module to predict the
/// semi-discrete rates.
struct AssemblyReport {
    State flux_a;      // physical boundary face flux at x=a (grid U)
    State flux_d;      // physical boundary face flux at x=d (grid V)
    double g_a = 0.0;  // one-sided boundary entropy flux w(u_0)^T flux_a - psi(u_0)
    double g_d = 0.0;
    double B_b = 0.0;  // interface entropy dissipation at b (kappa term), >= 0
    double B_c = 0.0;
    double D = 0.0;    // interior penalty dissipation (1/M) sum_m P^m, >= 0
};

/// The coupled semi-discrete operator: geometry, current grids, penalty and
/// interpolation configuration, and precomputed interface assembly data.
struct SemiDiscreteRHS {
    OversetGeometry1D geom;
    GridField u;
    GridField v;
    PenaltyConfig cfg;
    InterpolationOperator interp;
    BoundaryCondition bc;

    // derived at construction
    int u_cell_at_b = -1;  // last U cell with center <= b; penalty cell for P_u at b
    int v_cell_at_c = -1;  // first V cell with center >= c; penalty cell for P_v at c
    std::vector<double> interior_points;  // effective x^m (snapped in exact_node mode)
};

/// Validates the configuration, locates the interface cells and snaps interior
/// penalty points (exact_node mode) to shared overlap cell centers.
SemiDiscreteRHS make_semidiscrete(const ConservationLawSystem& sys,
                                  const OversetGeometry1D& geom, GridField u, GridField v,
                                  PenaltyConfig cfg, InterpolationOperator interp,
                                  BoundaryCondition bc);

/// Interior two-point flux differencing only; boundary faces contribute zero.
/// Throws AdmissibilityError naming the offending cell.
std::vector<State> interior_update(const ConservationLawSystem& sys, const GridField& field);

/// Adds the interface face fluxes and lifted penalties at b and c (in place).
void lift_interface(const ConservationLawSystem& sys, const SemiDiscreteRHS& rhs,
                    const GridField& u, const GridField& v, std::vector<State>& du,
                    std::vector<State>& dv, AssemblyReport* report = nullptr);

/// Adds the interior penalty lifts at each x^m (in place). No-op when M = 0.
void lift_interior(const ConservationLawSystem& sys, const SemiDiscreteRHS& rhs,
                   const GridField& u, const GridField& v, std::vector<State>& du,
                   std::vector<State>& dv, AssemblyReport* report = nullptr);

/// Adds the physical boundary face flux at one end of a grid (in place).
/// dirichlet_exact uses f_ec(interior, omega_ref) with an entropy-dissipative
/// penalty lambda/2 (w_in - w_out) where lambda bounds the local wave speed;
/// reflective_none uses the one-sided interior flux f(q_boundary).
void lift_physical_bc(const ConservationLawSystem& sys, const BoundaryCondition& bc,
                      const GridField& field, bool left_end, double t, std::vector<State>& dq,
                      State* boundary_flux = nullptr, double* boundary_entropy_flux = nullptr);

/// Full coupled overset right-hand side on the given grid states.
void overset_rhs(const ConservationLawSystem& sys, const SemiDiscreteRHS& rhs,
                 const GridField& u, const GridField& v, double t, std::vector<State>& du,
                 std::vector<State>& dv, AssemblyReport* report = nullptr);

/// Reference single-domain operator on one grid spanning [a,d]: interior
/// update plus physical boundary treatment at both ends, no penalties.
void single_domain_rhs(const ConservationLawSystem& sys, const BoundaryCondition& bc,
                       const GridField& field, double t, std::vector<State>& dq,
                       AssemblyReport* report = nullptr);

}  // namespace overset

#endif
