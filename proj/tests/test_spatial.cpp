/// @file test_spatial.cpp
/// @brief Semi-discrete operator tests: the 3-cell hand oracle, cellwise
///        entropy telescoping, the lifted-penalty example values, and bitwise
///        agreement with the single-domain operator on consistent data.

#include <doctest.h>

#include <cmath>
#include <random>

#include "overset/diagnostics.hpp"
#include "overset/spatial.hpp"

using namespace overset;

namespace {

const OversetGeometry1D kAligned{0.0, 0.375, 0.625, 1.0, 0.5};

SemiDiscreteRHS make_aligned_operator(const ConservationLawSystem& sys, int n, double eta,
                                      double kappa, int interior_points,
                                      const std::function<State(double)>& ic,
                                      BoundaryCondition bc = {}) {
    OversetGeometry1D geom = kAligned;
    geom.eta = eta;
    auto [u, v] = build_grids(geom, n, n);
    for (int j = 0; j < u.n_cells; ++j) u.values[static_cast<std::size_t>(j)] = ic(u.center(j));
    for (int k = 0; k < v.n_cells; ++k) v.values[static_cast<std::size_t>(k)] = ic(v.center(k));
    PenaltyConfig cfg = make_penalty_config(eta, kappa, interior_points, 1.0, geom.b, geom.c,
                                            sys.num_components());
    return make_semidiscrete(sys, geom, std::move(u), std::move(v), std::move(cfg),
                             InterpolationOperator{InterpolationOperator::Mode::exact_node, 3},
                             std::move(bc));
}

}  // namespace

TEST_CASE("interior update: constant field has zero time derivative") {
    auto sys = make_system("shallow_water");
    GridField g;
    g.x_left = 0.0;
    g.x_right = 1.0;
    g.n_cells = 8;
    g.dx = 0.125;
    g.values.assign(8, State{1.3, 0.4});
    const auto deriv = interior_update(*sys, g);
    // boundary faces are zero, so only the edge cells see a nonzero difference
    for (int j = 1; j < 7; ++j) CHECK(deriv[static_cast<std::size_t>(j)].norm_inf() == 0.0);
}

TEST_CASE("interior update: 3-cell hand oracle for burgers") {
    auto sys = make_system("burgers");
    GridField g;
    g.x_left = 0.0;
    g.x_right = 0.3;
    g.n_cells = 3;
    g.dx = 0.1;
    g.values = {State{1.0}, State{2.0}, State{3.0}};
    const auto deriv = interior_update(*sys, g);
    // faces: f_ec(1,2) = 7/6, f_ec(2,3) = 19/6; middle cell = -(19/6 - 7/6)/dx = -20
    CHECK(deriv[1][0] == doctest::Approx(-2.0 / 0.1).epsilon(1e-14));
    // edge cells see only their single interior face
    CHECK(deriv[0][0] == doctest::Approx(-(7.0 / 6.0) / 0.1).epsilon(1e-14));
    CHECK(deriv[2][0] == doctest::Approx((19.0 / 6.0) / 0.1).epsilon(1e-14));
}

TEST_CASE("interior update: cellwise entropy telescoping with the numerical entropy flux") {
    std::mt19937_64 rng(211);
    for (const char* name : {"burgers", "shallow_water", "euler"}) {
        auto sys = make_system(name);
        GridField g;
        g.x_left = 0.0;
        g.x_right = 1.0;
        g.n_cells = 12;
        g.dx = 1.0 / 12.0;
        g.values.resize(12);
        for (auto& q : g.values) q = sys->sample_admissible(rng);
        const auto deriv = interior_update(*sys, g);
        double span_sum = 0.0;
        for (int j = 1; j < g.n_cells - 1; ++j) {
            const State& q = g.values[static_cast<std::size_t>(j)];
            const double lhs = sys->entropy_variables(q).dot(deriv[static_cast<std::size_t>(j)]) * g.dx;
            const double f_right = sys->numerical_entropy_flux(
                q, g.values[static_cast<std::size_t>(j + 1)]);
            const double f_left = sys->numerical_entropy_flux(
                g.values[static_cast<std::size_t>(j - 1)], q);
            const double scale = std::max({1.0, std::abs(f_right), std::abs(f_left)});
            CHECK(std::abs(lhs + (f_right - f_left)) < 1e-12 * scale);
            span_sum += lhs;
        }
        // interior cells sum to the numerical entropy flux difference across the span
        const double f_first = sys->numerical_entropy_flux(g.values[0], g.values[1]);
        const double f_last = sys->numerical_entropy_flux(g.values[10], g.values[11]);
        CHECK(std::abs(span_sum + (f_last - f_first)) < 1e-11);
    }
}

TEST_CASE("physical boundary: flux reduces to f at matching reference data") {
    auto sys = make_system("burgers");
    BoundaryCondition bc;
    bc.kind = BoundaryCondition::Kind::dirichlet_exact;
    bc.reference = [](double, double) { return State{1.5}; };
    GridField g;
    g.x_left = 0.0;
    g.x_right = 1.0;
    g.n_cells = 4;
    g.dx = 0.25;
    g.values.assign(4, State{1.5});
    std::vector<State> deriv(4, State::zero(1));
    State flux;
    double gflux = 0.0;
    lift_physical_bc(*sys, bc, g, true, 0.0, deriv, &flux, &gflux);
    CHECK(flux[0] == sys->physical_flux(State{1.5})[0]);  // dissipation term exactly zero
    // the one-sided entropy flux of matching data is f_eps
    CHECK(gflux == doctest::Approx(sys->entropy_flux(State{1.5})).epsilon(1e-14));

    // the dissipative part never makes the boundary produce entropy: the
    // production g_inside - g_data is <= 0
    bc.reference = [](double, double) { return State{0.7}; };
    std::vector<State> deriv2(4, State::zero(1));
    lift_physical_bc(*sys, bc, g, true, 0.0, deriv2, &flux, &gflux);
    const State ghost{0.7};
    const double g_data =
        sys->entropy_variables(ghost).dot(flux) - sys->entropy_potential(ghost);
    CHECK(gflux - g_data <= 1e-12);

    BoundaryCondition missing;
    missing.kind = BoundaryCondition::Kind::dirichlet_exact;
    CHECK_THROWS_AS(lift_physical_bc(*sys, missing, g, true, 0.0, deriv, nullptr, nullptr),
                    ValidationError);
}

TEST_CASE("lifted interface penalty reproduces the hand value at b") {
    auto sys = make_system("burgers");
    // u identically 1, v identically 0 near the interfaces
    SemiDiscreteRHS rhs = make_aligned_operator(
        *sys, 40, 0.5, 0.0, 0, [](double) { return State{1.0}; });
    for (auto& q : rhs.v.values) q = State{0.0};

    std::vector<State> du, dv;
    AssemblyReport report;
    overset_rhs(*sys, rhs, rhs.u, rhs.v, 0.0, du, dv, &report);

    const double dx = rhs.u.dx;
    const int J = rhs.u_cell_at_b;
    // P_u at b is -1/6 for states (1,0), so the cell at b gains +1/6/dx
    CHECK(du[static_cast<std::size_t>(J)][0] == doctest::Approx((1.0 / 6.0) / dx).epsilon(1e-13));
    // P_v at c is -1/12; V's cell at c gains +1/12/dx
    const int K = rhs.v_cell_at_c;
    CHECK(dv[static_cast<std::size_t>(K)][0] ==
          doctest::Approx((1.0 / 12.0) / dx).epsilon(1e-13));
    // V's boundary face at b carries f_ec(0,1) = 1/6 into the first cell
    CHECK(dv[0][0] == doctest::Approx((1.0 / 6.0) / dx).epsilon(1e-13));
}

TEST_CASE("interface and interior lifts vanish when the solutions coincide") {
    auto sys = make_system("burgers");
    auto smooth = [](double x) { return State{1.0 + 0.3 * std::sin(2.0 * M_PI * x)}; };
    SemiDiscreteRHS rhs = make_aligned_operator(*sys, 40, 0.5, 1.0, 4, smooth);

    std::vector<State> du_base = interior_update(*sys, rhs.u);
    std::vector<State> dv_base = interior_update(*sys, rhs.v);
    std::vector<State> du = du_base, dv = dv_base;
    AssemblyReport report;
    lift_interface(*sys, rhs, rhs.u, rhs.v, du, dv, &report);
    lift_interior(*sys, rhs, rhs.u, rhs.v, du, dv, &report);

    // penalties, kappa and interior terms are exactly zero on consistent
    // data; only the boundary faces at b and c were added
    CHECK(report.B_b == 0.0);
    CHECK(report.B_c == 0.0);
    CHECK(report.D == 0.0);
    for (int j = 0; j < rhs.u.n_cells - 1; ++j)
        CHECK(du[static_cast<std::size_t>(j)][0] == du_base[static_cast<std::size_t>(j)][0]);
    for (int k = 1; k < rhs.v.n_cells; ++k)
        CHECK(dv[static_cast<std::size_t>(k)][0] == dv_base[static_cast<std::size_t>(k)][0]);
}

TEST_CASE("overset RHS equals the single-domain RHS bitwise on consistent aligned data") {
    for (const char* name : {"burgers", "shallow_water"}) {
        auto sys = make_system(name);
        auto smooth = [&](double x) {
            const double base = 1.0 + 0.25 * std::sin(2.0 * M_PI * x);
            if (sys->num_components() == 1) return State{base};
            return State{base, 0.1 * base};
        };
        BoundaryCondition bc;
        bc.kind = BoundaryCondition::Kind::reflective_none;
        SemiDiscreteRHS rhs = make_aligned_operator(*sys, 80, 0.5, 0.7, 0, smooth, bc);

        GridField single;
        single.x_left = kAligned.a;
        single.x_right = kAligned.d;
        single.dx = rhs.u.dx;  // aligned layout shares one lattice
        single.n_cells = static_cast<int>(std::llround((kAligned.d - kAligned.a) / single.dx));
        single.values.resize(static_cast<std::size_t>(single.n_cells));
        for (int j = 0; j < single.n_cells; ++j)
            single.values[static_cast<std::size_t>(j)] = smooth(single.center(j));

        std::vector<State> du, dv, ds;
        overset_rhs(*sys, rhs, rhs.u, rhs.v, 0.0, du, dv);
        single_domain_rhs(*sys, bc, single, 0.0, ds);

        const int offset_v = static_cast<int>(std::llround((kAligned.b - kAligned.a) / single.dx));
        for (int j = 0; j < rhs.u.n_cells; ++j)
            for (int i = 0; i < sys->num_components(); ++i)
                CHECK(du[static_cast<std::size_t>(j)][i] == ds[static_cast<std::size_t>(j)][i]);
        for (int k = 0; k < rhs.v.n_cells; ++k)
            for (int i = 0; i < sys->num_components(); ++i)
                CHECK(dv[static_cast<std::size_t>(k)][i] ==
                      ds[static_cast<std::size_t>(k + offset_v)][i]);
    }
}

TEST_CASE("semi-discrete identities hold for arbitrary admissible grid data") {
    std::mt19937_64 rng(307);
    for (const char* name : {"burgers", "shallow_water", "euler"}) {
        auto sys = make_system(name);
        for (double eta : {0.1, 0.5, 0.9}) {
            for (double kappa : {0.0, 0.8}) {
                for (int m_points : {0, 4}) {
                    OversetGeometry1D geom = kAligned;
                    geom.eta = eta;
                    auto [u, v] = build_grids(geom, 40, 40);
                    for (auto& q : u.values) q = sys->sample_admissible(rng);
                    for (auto& q : v.values) q = sys->sample_admissible(rng);
                    PenaltyConfig cfg = make_penalty_config(eta, kappa, m_points, 1.0, geom.b,
                                                            geom.c, sys->num_components());
                    BoundaryCondition bc;
                    bc.kind = BoundaryCondition::Kind::reflective_none;
                    SemiDiscreteRHS rhs = make_semidiscrete(
                        *sys, geom, std::move(u), std::move(v), std::move(cfg),
                        InterpolationOperator{InterpolationOperator::Mode::exact_node, 3}, bc);

                    const BudgetLedger entry =
                        verify_semidiscrete_identities(*sys, rhs, rhs.u, rhs.v, 0.0);
                    const double scale = std::max(1.0, std::abs(entry.S_bar));
                    CHECK(entry.entropy_rate_residual < 1e-11 * scale);
                    CHECK(entry.conservation_rate_residual.norm_inf() < 1e-11 * scale);
                    CHECK(entry.D >= -1e-14);
                    if (kappa > 0.0) {
                        CHECK(entry.B_b >= 0.0);
                        CHECK(entry.B_c >= 0.0);
                    }
                    if (m_points > 0) CHECK(entry.D >= 0.0);
                }
            }
        }
    }
}

TEST_CASE("make_semidiscrete validation") {
    auto sys = make_system("burgers");
    OversetGeometry1D geom = kAligned;
    auto [u, v] = build_grids(geom, 40, 40);
    for (auto& q : u.values) q = State{1.0};
    for (auto& q : v.values) q = State{1.0};

    PenaltyConfig eta_mismatch = make_penalty_config(0.25, 0.0, 0, 1.0, geom.b, geom.c, 1);
    CHECK_THROWS_WITH_AS(
        make_semidiscrete(*sys, geom, u, v, eta_mismatch,
                          InterpolationOperator{InterpolationOperator::Mode::exact_node, 3},
                          BoundaryCondition{}),
        doctest::Contains("eta"), ValidationError);

    BoundaryCondition bad;
    bad.kind = BoundaryCondition::Kind::dirichlet_exact;  // no reference attached
    PenaltyConfig cfg = make_penalty_config(geom.eta, 0.0, 0, 1.0, geom.b, geom.c, 1);
    CHECK_THROWS_WITH_AS(
        make_semidiscrete(*sys, geom, u, v, cfg,
                          InterpolationOperator{InterpolationOperator::Mode::exact_node, 3}, bad),
        doctest::Contains("reference"), ValidationError);
}
