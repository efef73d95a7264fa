/// @file diagnostics.hpp
/// @brief Global diagnostics: eta-weighted total entropy and conserved totals,
///        interface/interior dissipation bookkeeping, and residuals of the
///        semi-discrete conservation and entropy identities.
///
/// Overlap membership is by cell center: a cell belongs to [b,c] when its
/// center does. Overlap cells carry weight (1-eta) on grid U and eta on grid V;
/// all other cells carry weight 1. Quadrature is the midpoint/cell-average sum,
/// exact for the finite-volume data model.

#ifndef OVERSET_DIAGNOSTICS_HPP
#define OVERSET_DIAGNOSTICS_HPP

#include <string>
#include <vector>

#include "overset/geometry.hpp"
#include "overset/state.hpp"
#include "overset/systems.hpp"

namespace overset {

struct SemiDiscreteRHS;     // spatial.hpp
struct AssemblyReport;      // spatial.hpp
struct BoundaryCondition;   // spatial.hpp

/// One per-step record of the budget quantities and identity residuals.
struct BudgetLedger {
    double t = 0.0;
    double S_bar = 0.0;                  // eta-weighted total entropy
    State conserved_totals;              // eta-weighted conserved totals, length p
    double B_b = 0.0;                    // interface entropy dissipation at b
    double B_c = 0.0;
    double D = 0.0;                      // interior penalty dissipation, >= 0
    double entropy_rate_residual = 0.0;  // |measured - predicted|
    State conservation_rate_residual;    // componentwise |measured - predicted|
};

/// eta-weighting of one cell in the global functionals.
double overlap_weight(const OversetGeometry1D& geom, const GridField& field, int cell);

/// S_bar = sum of s(q) dx with overlap cells convexly weighted.
double total_entropy(const ConservationLawSystem& sys, const OversetGeometry1D& geom,
                     const GridField& u, const GridField& v);

/// eta-weighted conserved totals, componentwise.
State conserved_totals(const ConservationLawSystem& sys, const OversetGeometry1D& geom,
                       const GridField& u, const GridField& v);

/// Evaluates the coupled RHS at (u, v, t) and compares the measured
/// eta-weighted rates against the predictions
///   d/dt totals  = flux_a - flux_d
///   d/dt S_bar   = g_a - g_d - B_b - B_c - D.
/// Returns a ledger entry carrying both residuals; exact_node-aligned runs with
/// consistent donors produce residuals at roundoff level.
BudgetLedger verify_semidiscrete_identities(const ConservationLawSystem& sys,
                                            const SemiDiscreteRHS& rhs, const GridField& u,
                                            const GridField& v, double t);

/// Single-domain version of the same check (no B or D terms).
BudgetLedger verify_semidiscrete_identities_single(const ConservationLawSystem& sys,
                                                   const BoundaryCondition& bc,
                                                   const GridField& field, double t);

/// Ledger entry from precomputed RHS values and assembly report (used by the
/// time loop to avoid duplicate RHS evaluations).
BudgetLedger make_ledger_entry(const ConservationLawSystem& sys, const OversetGeometry1D& geom,
                               const GridField& u, const GridField& v,
                               const std::vector<State>& du, const std::vector<State>& dv,
                               const AssemblyReport& report, double t);

/// Writes the ledger series as CSV: header row, one row per entry, LF line
/// endings, 17 significant digits. Columns:
/// t,S_bar,conserved_0..p-1,B_b,B_c,D,entropy_rate_residual,conservation_rate_residual_0..p-1
void emit_ledger(const std::vector<BudgetLedger>& series, const std::string& path);

}  // namespace overset

#endif
