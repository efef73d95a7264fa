/// @file test_geometry.cpp

#include <doctest.h>

#include <cmath>

#include "overset/geometry.hpp"

using namespace overset;

namespace {

GridField constant_grid(double x_left, double x_right, int n, const State& value) {
    GridField g;
    g.x_left = x_left;
    g.x_right = x_right;
    g.n_cells = n;
    g.dx = (x_right - x_left) / n;
    g.values.assign(static_cast<std::size_t>(n), value);
    return g;
}

}  // namespace

TEST_CASE("build_grids arithmetic and preconditions") {
    OversetGeometry1D geom{0.0, 0.4, 0.6, 1.0, 0.5};
    auto [u, v] = build_grids(geom, 10, 10);
    CHECK(u.dx == doctest::Approx(0.06).epsilon(1e-15));
    CHECK(v.dx == doctest::Approx(0.06).epsilon(1e-15));
    CHECK(u.center(0) == doctest::Approx(0.03));
    CHECK(u.face(10) == doctest::Approx(0.6));

    CHECK_THROWS_AS(build_grids(geom, 2, 10), ValidationError);
    OversetGeometry1D bad{0.0, 0.6, 0.4, 1.0, 0.5};
    CHECK_THROWS_AS(build_grids(bad, 10, 10), ValidationError);
    OversetGeometry1D bad_eta{0.0, 0.4, 0.6, 1.0, 1.0};
    CHECK_THROWS_AS(build_grids(bad_eta, 10, 10), ValidationError);
}

TEST_CASE("exact_node returns the donor value bitwise") {
    GridField g = constant_grid(0.0, 1.0, 10, State{0.0});
    for (int j = 0; j < g.n_cells; ++j) g.values[static_cast<std::size_t>(j)] = State{0.1 * j + 1.0 / 3.0};
    InterpolationOperator interp{InterpolationOperator::Mode::exact_node, 3};

    for (int j = 0; j < g.n_cells; ++j) {
        const State got = evaluate_at(g, g.center(j), interp);
        CHECK(got[0] == g.values[static_cast<std::size_t>(j)][0]);  // bitwise
    }
    CHECK_THROWS_AS(evaluate_at(g, 0.5, interp), ValidationError);       // on a face
    CHECK_THROWS_AS(evaluate_at(g, 1.0 + g.dx, interp), ValidationError);  // outside span
}

TEST_CASE("interpolation reproduces constants") {
    const State w{2.5};
    GridField g = constant_grid(0.0, 1.0, 16, w);
    for (auto mode : {InterpolationOperator::Mode::lagrange}) {
        InterpolationOperator interp{mode, 3};
        for (double x : {0.01, 0.25, 0.5, 0.73, 0.999})
            CHECK(evaluate_at(g, x, interp)[0] == doctest::Approx(2.5).epsilon(1e-14));
    }
}

TEST_CASE("lagrange reproduces polynomials of degree <= q") {
    for (int q = 1; q <= 4; ++q) {
        GridField g = constant_grid(0.0, 2.0, 24, State{0.0});
        auto poly = [&](double x) {
            double acc = 0.0, power = 1.0;
            for (int k = 0; k <= q; ++k) {
                acc += (0.3 + 0.7 * k) * power;
                power *= (x - 0.4);
            }
            return acc;
        };
        for (int j = 0; j < g.n_cells; ++j)
            g.values[static_cast<std::size_t>(j)] = State{poly(g.center(j))};
        InterpolationOperator interp{InterpolationOperator::Mode::lagrange, q};
        for (double x : {0.05, 0.37, 1.0, 1.62, 1.97}) {
            const double got = evaluate_at(g, x, interp)[0];
            CHECK(std::abs(got - poly(x)) < 1e-10 * std::max(1.0, std::abs(poly(x))));
        }
    }
}

TEST_CASE("grids_aligned detects the shared-lattice configuration") {
    OversetGeometry1D geom{0.0, 0.375, 0.625, 1.0, 0.5};
    {
        auto [u, v] = build_grids(geom, 40, 40);  // dx = 1/64 on both, faces at b and c
        CHECK(grids_aligned(geom, u, v));
    }
    {
        auto [u, v] = build_grids(geom, 40, 37);
        CHECK_FALSE(grids_aligned(geom, u, v));
    }
    {
        OversetGeometry1D skew{0.0, 0.37, 0.625, 1.0, 0.5};
        auto [u, v] = build_grids(skew, 40, 40);
        CHECK_FALSE(grids_aligned(skew, u, v));
    }
}
