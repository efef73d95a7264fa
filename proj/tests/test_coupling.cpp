/// @file test_coupling.cpp
/// @brief Penalty function tests: hand-computed values, the Burgers closed
///        forms, and the randomized conservation / entropy-budget identities.

#include <doctest.h>

#include <cmath>
#include <random>

#include "overset/coupling.hpp"

using namespace overset;

namespace {

constexpr InterfaceSide kSideB{InterfaceSide::B};
constexpr InterfaceSide kSideC{InterfaceSide::C};

SmallMatrix random_spd(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    SmallMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = unit(rng);
    // R^T R + I is SPD
    SmallMatrix spd(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k) acc += r(k, i) * r(k, j);
            spd(i, j) = acc + (i == j ? 1.0 : 0.0);
        }
    return spd;
}

double scale_of(const ConservationLawSystem& sys, double b, const State& q_u, const State& q_v) {
    return std::max({1.0, b * sys.physical_flux(q_u).norm_inf(),
                     b * sys.physical_flux(q_v).norm_inf()});
}

}  // namespace

TEST_CASE("beta weights") {
    CHECK(beta(kSideB, 0.5) == 0.5);
    CHECK(beta(kSideC, 0.25) == 0.75);
    CHECK(kSideB.normal_sign() == -1.0);
    CHECK(kSideC.normal_sign() == 1.0);
    CHECK_THROWS_AS(beta(kSideB, 0.0), ValidationError);
    CHECK_THROWS_AS(beta(kSideC, 1.0), ValidationError);
}

TEST_CASE("burgers penalty hand values") {
    auto sys = make_system("burgers");
    const State u{1.0}, v{0.0};
    CHECK(penalty_u(*sys, kSideB, 0.5, u, v)[0] == doctest::Approx(-1.0 / 6.0).epsilon(1e-15));
    CHECK(penalty_v(*sys, kSideB, 0.5, u, v)[0] == doctest::Approx(-1.0 / 12.0).epsilon(1e-15));
    // penalties vanish exactly on agreement
    CHECK(penalty_u(*sys, kSideB, 0.3, State{1.3}, State{1.3}).norm_inf() == 0.0);
    CHECK(penalty_v(*sys, kSideC, 0.7, State{-0.4}, State{-0.4}).norm_inf() == 0.0);
}

TEST_CASE("burgers closed forms: generic penalties match the factored expressions") {
    auto sys = make_system("burgers");
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> box(-3.0, 3.0);
    for (double eta : {0.1, 0.5, 0.9}) {
        for (int trial = 0; trial < 1000; ++trial) {
            const double u = box(rng), v = box(rng);
            for (InterfaceSide side : {kSideB, kSideC}) {
                const double b = beta(side, eta);
                const double pu = penalty_u(*sys, side, eta, State{u}, State{v})[0];
                const double pv = penalty_v(*sys, side, eta, State{u}, State{v})[0];
                CHECK(std::abs(pu - (-(b / 6.0) * (2.0 * u + v) * (u - v))) <= 1e-14);
                CHECK(std::abs(pv - (-(b / 6.0) * (u + 2.0 * v) * (u - v))) <= 1e-14);
            }
        }
    }
}

TEST_CASE("conservation residual") {
    auto sys = make_system("burgers");
    // hand arithmetic: P_u + P_v = -1/4 cancels beta [[f]] = 1/4
    CHECK(conservation_residual(*sys, kSideB, 0.5, State{1.0}, State{0.0}).norm_inf() == 0.0);
    CHECK(conservation_residual(*sys, kSideC, 0.3, State{0.9}, State{0.9}).norm_inf() == 0.0);

    std::mt19937_64 rng(103);
    for (const char* name : {"burgers", "shallow_water", "euler"}) {
        auto s = make_system(name);
        for (double eta : {0.1, 0.5, 0.9}) {
            for (int trial = 0; trial < 300; ++trial) {
                const State a = s->sample_admissible(rng);
                const State b = s->sample_admissible(rng);
                for (InterfaceSide side : {kSideB, kSideC}) {
                    const double res = conservation_residual(*s, side, eta, a, b).norm_inf();
                    CHECK(res < 1e-13 * scale_of(*s, beta(side, eta), a, b));
                }
            }
        }
    }
}

TEST_CASE("entropy budget B") {
    auto sys = make_system("burgers");
    // 0.5*(1/3) + 1*(-1/6) + 0*(-1/12) = 0 (to roundoff in 1/3 vs 1/6)
    CHECK(std::abs(entropy_budget_B(*sys, kSideB, 0.5, State{1.0}, State{0.0})) < 1e-15);
    CHECK(entropy_budget_B(*sys, kSideC, 0.4, State{0.8}, State{0.8}) == 0.0);

    std::mt19937_64 rng(107);
    for (const char* name : {"burgers", "shallow_water", "euler"}) {
        auto s = make_system(name);
        for (double eta : {0.1, 0.5, 0.9}) {
            for (int trial = 0; trial < 300; ++trial) {
                const State a = s->sample_admissible(rng);
                const State b = s->sample_admissible(rng);
                for (InterfaceSide side : {kSideB, kSideC}) {
                    const double scale =
                        std::max({1.0, std::abs(s->entropy_flux(a)), std::abs(s->entropy_flux(b))});
                    CHECK(std::abs(entropy_budget_B(*s, side, eta, a, b)) < 1e-13 * scale);

                    // with dissipation the budget is exactly the kappa term
                    const double kappa = 0.35;
                    const State jump = s->entropy_variables(a) - s->entropy_variables(b);
                    const double budget = entropy_budget_B(*s, side, eta, a, b, kappa);
                    CHECK(budget >= -1e-14);
                    CHECK(std::abs(budget - kappa * jump.dot(jump)) <
                          1e-13 * std::max(1.0, kappa * jump.dot(jump)));
                }
            }
        }
    }
}

TEST_CASE("interface dissipation term") {
    auto sys = make_system("burgers");
    auto [zero_u, zero_v] = interface_dissipation_term(*sys, 0.0, State{1.0}, State{0.0});
    CHECK(zero_u.norm_inf() == 0.0);
    CHECK(zero_v.norm_inf() == 0.0);

    auto [d_u, d_v] = interface_dissipation_term(*sys, 1.0, State{1.0}, State{0.0});
    CHECK(d_u[0] == 1.0);
    CHECK(d_v[0] == -1.0);
    CHECK((d_u + d_v).norm_inf() == 0.0);
    CHECK_THROWS_AS(interface_dissipation_term(*sys, -0.5, State{1.0}, State{0.0}),
                    ValidationError);
}

TEST_CASE("interior penalty hand values and invariants") {
    auto sys = make_system("burgers");
    // eta = 0.5 forces Sigma_u = Sigma_v; Burgers w = q
    PenaltyConfig cfg = make_penalty_config(0.5, 0.0, {0.5}, {SmallMatrix::identity(1, 1.0)});
    auto [t_u, t_v] = interior_penalty(*sys, cfg, 0, State{1.0}, State{0.0});
    CHECK(t_u[0] == 1.0);
    CHECK(t_v[0] == -1.0);
    CHECK(interior_penalty_dissipation(*sys, cfg, 0, State{1.0}, State{0.0}) ==
          doctest::Approx(0.5).epsilon(1e-15));

    auto [n_u, n_v] = interior_penalty(*sys, cfg, 0, State{0.7}, State{0.7});
    CHECK(n_u.norm_inf() == 0.0);
    CHECK(n_v.norm_inf() == 0.0);
    CHECK(interior_penalty_dissipation(*sys, cfg, 0, State{0.7}, State{0.7}) == 0.0);
}

TEST_CASE("interior penalty property: P^m >= 0 and the two formulas agree") {
    std::mt19937_64 rng(109);
    for (const char* name : {"burgers", "shallow_water", "euler"}) {
        auto sys = make_system(name);
        const int p = sys->num_components();
        for (double eta : {0.1, 0.5, 0.9}) {
            for (int trial = 0; trial < 200; ++trial) {
                PenaltyConfig cfg =
                    make_penalty_config(eta, 0.0, {0.5}, {random_spd(rng, p)});
                const State a = sys->sample_admissible(rng);
                const State b = sys->sample_admissible(rng);
                const double pm = interior_penalty_dissipation(*sys, cfg, 0, a, b);
                CHECK(pm >= -1e-14);
                const State jump = sys->entropy_variables(a) - sys->entropy_variables(b);
                const double quad = (1.0 - eta) * jump.dot(cfg.sigma_u[0].apply(jump));
                CHECK(std::abs(pm - quad) <= 1e-13 * std::max(1.0, quad));
            }
        }
    }
}

TEST_CASE("coupling condition is enforced at construction") {
    PenaltyConfig cfg = make_penalty_config(0.25, 0.0, {0.5}, {SmallMatrix::identity(1, 2.0)});
    // Sigma_v = ((1-eta)/eta) Sigma_u = 3 Sigma_u
    CHECK(cfg.sigma_v[0](0, 0) == doctest::Approx(6.0));
    cfg.validate(1);

    // a broken pair must be rejected
    cfg.sigma_v[0] = SmallMatrix::identity(1, 1.0);
    CHECK_THROWS_WITH_AS(cfg.validate(1), doctest::Contains("coupling condition"),
                         ValidationError);

    // non-SPD Sigma rejected
    CHECK_THROWS_AS(make_penalty_config(0.5, 0.0, {0.5}, {SmallMatrix::identity(1, -1.0)}),
                    ValidationError);
}
