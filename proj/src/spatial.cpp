#include "overset/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace overset {

namespace {

void check_field(const ConservationLawSystem& sys, const GridField& field) {
    const char* label = field.domain_id == DomainId::U ? "U" : "V";
    for (int j = 0; j < field.n_cells; ++j) {
        try {
            sys.check_admissible(field.values[static_cast<std::size_t>(j)]);
        } catch (const AdmissibilityError& err) {
            throw AdmissibilityError("domain " + std::string(label) + ", cell " +
                                     std::to_string(j) + ": " + err.what());
        }
    }
}

/// Entropy-dissipative boundary face flux. The ghost state sits at the
/// mirrored cell center so f_ec(ghost, interior) is second-order at the face;
/// the lambda penalty acts on the deviation of the interior cell from the
/// reference at the same center, so it damps the numerical error without
/// injecting an O(dx) flux perturbation. Exactly consistent when the interior
/// matches the reference.
State dissipative_face_flux(const ConservationLawSystem& sys, const State& ghost,
                            const State& interior, const State& interior_ref, bool left_end) {
    const double lambda = std::max(sys.max_wave_speed(ghost), sys.max_wave_speed(interior));
    const State w_dev = sys.entropy_variables(interior) - sys.entropy_variables(interior_ref);
    const State pair_flux =
        left_end ? sys.ec_flux(ghost, interior) : sys.ec_flux(interior, ghost);
    const double sign = left_end ? -1.0 : 1.0;
    return pair_flux + (0.5 * sign * lambda) * w_dev;
}

double one_sided_entropy_flux(const ConservationLawSystem& sys, const State& q,
                              const State& face_flux) {
    return sys.entropy_variables(q).dot(face_flux) - sys.entropy_potential(q);
}

}  // namespace

SemiDiscreteRHS make_semidiscrete(const ConservationLawSystem& sys,
                                  const OversetGeometry1D& geom, GridField u, GridField v,
                                  PenaltyConfig cfg, InterpolationOperator interp,
                                  BoundaryCondition bc) {
    geom.validate();
    cfg.validate(sys.num_components());
    if (std::abs(cfg.eta - geom.eta) > 1e-14)
        throw ValidationError("penalty config eta must match geometry eta");
    if (bc.kind == BoundaryCondition::Kind::dirichlet_exact && !bc.reference)
        throw ValidationError("dirichlet_exact boundary condition requires a reference solution");

    SemiDiscreteRHS rhs;
    rhs.geom = geom;
    rhs.cfg = std::move(cfg);
    rhs.interp = interp;
    rhs.bc = std::move(bc);

    // penalty cells: last U center <= b, first V center >= c
    rhs.u_cell_at_b = static_cast<int>(std::floor((geom.b - u.x_left) / u.dx - 0.5));
    rhs.v_cell_at_c = static_cast<int>(std::ceil((geom.c - v.x_left) / v.dx - 0.5));
    if (rhs.u_cell_at_b < 0 || rhs.u_cell_at_b > u.n_cells - 2)
        throw ValidationError("interface b leaves no U cell on one side");
    if (rhs.v_cell_at_c < 1 || rhs.v_cell_at_c > v.n_cells - 1)
        throw ValidationError("interface c leaves no V cell on one side");

    // ghost donor points must be interpolable on the other grid
    if (!(geom.c + 0.5 * u.dx <= v.x_right))
        throw ValidationError("U's ghost point at c falls outside grid V");
    if (!(geom.b - 0.5 * v.dx >= u.x_left))
        throw ValidationError("V's ghost point at b falls outside grid U");

    rhs.interior_points = rhs.cfg.interior_points;
    if (interp.mode == InterpolationOperator::Mode::exact_node) {
        // snap to the nearest shared overlap cell center so co-located donor
        // states exist; keeps points strictly inside (b,c)
        for (double& xm : rhs.interior_points) {
            const int j = u.nearest_cell(xm);
            xm = u.center(std::clamp(j, rhs.u_cell_at_b + 1,
                                     u.n_cells - 1));
        }
    }
    for (double xm : rhs.interior_points)
        if (!(xm > geom.b && xm < geom.c))
            throw ValidationError("interior penalty point outside (b,c)");

    rhs.u = std::move(u);
    rhs.v = std::move(v);
    return rhs;
}

std::vector<State> interior_update(const ConservationLawSystem& sys, const GridField& field) {
    check_field(sys, field);
    const int n = field.n_cells;
    std::vector<State> deriv(static_cast<std::size_t>(n), State::zero(sys.num_components()));
    State flux_left = State::zero(sys.num_components());  // zero boundary face
    for (int j = 0; j < n; ++j) {
        State flux_right = State::zero(sys.num_components());
        if (j + 1 < n)
            flux_right = sys.ec_flux(field.values[static_cast<std::size_t>(j)],
                                     field.values[static_cast<std::size_t>(j + 1)]);
        deriv[static_cast<std::size_t>(j)] = (-1.0 / field.dx) * (flux_right - flux_left);
        flux_left = flux_right;
    }
    return deriv;
}

void lift_physical_bc(const ConservationLawSystem& sys, const BoundaryCondition& bc,
                      const GridField& field, bool left_end, double t, std::vector<State>& dq,
                      State* boundary_flux, double* boundary_entropy_flux) {
    const int edge = left_end ? 0 : field.n_cells - 1;
    const State& interior = field.values[static_cast<std::size_t>(edge)];
    State flux;
    switch (bc.kind) {
        case BoundaryCondition::Kind::dirichlet_exact: {
            if (!bc.reference) throw ValidationError("missing reference solution for dirichlet_exact");
            const double x_ghost =
                left_end ? field.x_left - 0.5 * field.dx : field.x_right + 0.5 * field.dx;
            const State ghost = bc.reference(x_ghost, t);
            const State interior_ref = bc.reference(field.center(edge), t);
            sys.check_admissible(ghost);
            flux = dissipative_face_flux(sys, ghost, interior, interior_ref, left_end);
            break;
        }
        case BoundaryCondition::Kind::reflective_none:
            flux = sys.physical_flux(interior);
            break;
    }
    // interior_update left the boundary face at zero; add the real face flux
    const double sign = left_end ? 1.0 : -1.0;
    dq[static_cast<std::size_t>(edge)] += (sign / field.dx) * flux;
    if (boundary_flux) *boundary_flux = flux;
    if (boundary_entropy_flux) *boundary_entropy_flux = one_sided_entropy_flux(sys, interior, flux);
}

void lift_interface(const ConservationLawSystem& sys, const SemiDiscreteRHS& rhs,
                    const GridField& u, const GridField& v, std::vector<State>& du,
                    std::vector<State>& dv, AssemblyReport* report) {
    const double eta = rhs.cfg.eta;

    // --- own artificial boundary faces: f_ec(own, other) ---
    // U's right face at c; donor point is the ghost cell center c + dx/2
    const State& u_edge = u.values[static_cast<std::size_t>(u.n_cells - 1)];
    const State v_at_ghost_c = evaluate_at(v, rhs.geom.c + 0.5 * u.dx, rhs.interp);
    const State flux_uc = sys.ec_flux(u_edge, v_at_ghost_c);
    du[static_cast<std::size_t>(u.n_cells - 1)] += (-1.0 / u.dx) * flux_uc;

    // V's left face at b
    const State& v_edge = v.values[0];
    const State u_at_ghost_b = evaluate_at(u, rhs.geom.b - 0.5 * v.dx, rhs.interp);
    const State flux_vb = sys.ec_flux(v_edge, u_at_ghost_b);
    dv[0] += (1.0 / v.dx) * flux_vb;

    // --- cross penalties lifted into the face-adjacent cells ---
    // at b: cell J = u_cell_at_b sees its right-face flux pulled toward the
    // coupled flux with weight eta
    const int J = rhs.u_cell_at_b;
    const State& u_J = u.values[static_cast<std::size_t>(J)];
    const State& u_J1 = u.values[static_cast<std::size_t>(J + 1)];
    const State v_at_J1 = evaluate_at(v, u.center(J + 1), rhs.interp);
    const State own_flux_b = sys.ec_flux(u_J, u_J1);
    const State coupled_flux_b = sys.ec_flux(u_J, v_at_J1);
    const State penalty_b = eta * (coupled_flux_b - own_flux_b);
    du[static_cast<std::size_t>(J)] += (-1.0 / u.dx) * penalty_b;

    // at c: cell K = v_cell_at_c sees its left-face flux pulled toward the
    // coupled flux with weight (1-eta)
    const int K = rhs.v_cell_at_c;
    const State& v_K = v.values[static_cast<std::size_t>(K)];
    const State& v_K1 = v.values[static_cast<std::size_t>(K - 1)];
    const State u_at_K1 = evaluate_at(u, v.center(K - 1), rhs.interp);
    const State own_flux_c = sys.ec_flux(v_K1, v_K);
    const State coupled_flux_c = sys.ec_flux(u_at_K1, v_K);
    const State penalty_c = (1.0 - eta) * (own_flux_c - coupled_flux_c);
    dv[static_cast<std::size_t>(K)] += (-1.0 / v.dx) * penalty_c;

    // --- optional interface dissipation on the co-located edge pairs ---
    double B_b = 0.0, B_c = 0.0;
    if (rhs.cfg.kappa > 0.0) {
        const double kappa = rhs.cfg.kappa;
        // at b: pair (u_{J+1}, v interpolated at its center)
        {
            const State w_jump =
                sys.entropy_variables(u_J1) - sys.entropy_variables(v_at_J1);
            B_b = kappa * w_jump.dot(w_jump);
            du[static_cast<std::size_t>(J + 1)] +=
                (-kappa / ((1.0 - eta) * u.dx)) * w_jump;
            const int kv = v.cell_of(u.center(J + 1));
            dv[static_cast<std::size_t>(kv)] += (kappa / (eta * v.dx)) * w_jump;
        }
        // at c: pair (u interpolated at v_{K-1}'s center, v_{K-1})
        {
            const State w_jump =
                sys.entropy_variables(u_at_K1) - sys.entropy_variables(v_K1);
            B_c = kappa * w_jump.dot(w_jump);
            const int ju = u.cell_of(v.center(K - 1));
            du[static_cast<std::size_t>(ju)] += (-kappa / ((1.0 - eta) * u.dx)) * w_jump;
            dv[static_cast<std::size_t>(K - 1)] += (kappa / (eta * v.dx)) * w_jump;
        }
    }

    if (report) {
        report->B_b = B_b;
        report->B_c = B_c;
    }
}

void lift_interior(const ConservationLawSystem& sys, const SemiDiscreteRHS& rhs,
                   const GridField& u, const GridField& v, std::vector<State>& du,
                   std::vector<State>& dv, AssemblyReport* report) {
    const int m_count = static_cast<int>(rhs.interior_points.size());
    if (m_count == 0) return;
    const double inv_m = 1.0 / m_count;
    double dissipation = 0.0;
    for (int m = 0; m < m_count; ++m) {
        const double xm = rhs.interior_points[static_cast<std::size_t>(m)];
        const State q_u = evaluate_at(u, xm, rhs.interp);
        const State q_v = evaluate_at(v, xm, rhs.interp);
        auto [term_u, term_v] = interior_penalty(sys, rhs.cfg, m, q_u, q_v);
        du[static_cast<std::size_t>(u.cell_of(xm))] += (-inv_m / u.dx) * term_u;
        dv[static_cast<std::size_t>(v.cell_of(xm))] += (-inv_m / v.dx) * term_v;
        dissipation += inv_m * interior_penalty_dissipation(sys, rhs.cfg, m, q_u, q_v);
    }
    if (report) report->D = dissipation;
}

void overset_rhs(const ConservationLawSystem& sys, const SemiDiscreteRHS& rhs,
                 const GridField& u, const GridField& v, double t, std::vector<State>& du,
                 std::vector<State>& dv, AssemblyReport* report) {
    du = interior_update(sys, u);
    dv = interior_update(sys, v);

    AssemblyReport local;
    AssemblyReport* rep = report ? report : &local;
    lift_physical_bc(sys, rhs.bc, u, /*left_end=*/true, t, du, &rep->flux_a, &rep->g_a);
    lift_physical_bc(sys, rhs.bc, v, /*left_end=*/false, t, dv, &rep->flux_d, &rep->g_d);
    lift_interface(sys, rhs, u, v, du, dv, rep);
    lift_interior(sys, rhs, u, v, du, dv, rep);
}

void single_domain_rhs(const ConservationLawSystem& sys, const BoundaryCondition& bc,
                       const GridField& field, double t, std::vector<State>& dq,
                       AssemblyReport* report) {
    dq = interior_update(sys, field);
    AssemblyReport local;
    AssemblyReport* rep = report ? report : &local;
    lift_physical_bc(sys, bc, field, /*left_end=*/true, t, dq, &rep->flux_a, &rep->g_a);
    lift_physical_bc(sys, bc, field, /*left_end=*/false, t, dq, &rep->flux_d, &rep->g_d);
    rep->B_b = rep->B_c = rep->D = 0.0;
}

}  // namespace overset
