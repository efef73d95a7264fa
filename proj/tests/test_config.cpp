/// @file test_config.cpp

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "overset/config.hpp"

using namespace overset;

namespace {

const char* kMinimalConfig = R"json({
  "system": {"name": "burgers"},
  "integrator": {"t_final": 0.5}
})json";

}  // namespace

TEST_CASE("minimal config applies the documented defaults") {
    const RunConfig config = parse_config(kMinimalConfig);
    CHECK(config.geometry.eta == 0.5);
    CHECK(config.kappa == 0.0);
    CHECK(config.interior_count == 0);
    CHECK(config.integrator.method == IntegratorConfig::Method::ssprk3);
    CHECK(config.integrator.cfl == 0.5);
    CHECK(config.interp.mode == InterpolationOperator::Mode::exact_node);
    CHECK(config.bc_kind == BoundaryCondition::Kind::dirichlet_exact);
}

TEST_CASE("validation errors name the offending invariant") {
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"geometry": {"eta": 1.0}, "integrator": {"t_final": 1.0}})"),
        doctest::Contains("eta must lie in (0,1)"), ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"geometry": {"b": 0.7, "c": 0.6}, "integrator": {"t_final": 1.0}})"),
        doctest::Contains("a < b < c < d"), ValidationError);
    CHECK_THROWS_WITH_AS(parse_config(R"({"bogus_section": {}})"),
                         doctest::Contains("unknown key"), ValidationError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"grids": {"n_u": 2}, "integrator": {"t_final": 1.0}})"),
        doctest::Contains("n_u"), ValidationError);
    CHECK_THROWS_AS(parse_config("{not json"), ValidationError);
    CHECK_THROWS_AS(load_config("does_not_exist.json"), ValidationError);
}

TEST_CASE("config round-trip is a fixed point") {
    const RunConfig first = parse_config(kMinimalConfig);
    const std::string text1 = serialize_config(first);
    const RunConfig second = parse_config(text1);
    const std::string text2 = serialize_config(second);
    CHECK(text1 == text2);
}

TEST_CASE("burgers characteristic reference satisfies u = u0(x - u t)") {
    auto sys = make_system("burgers");
    const InitialCondition ic = make_initial_condition(*sys, "sine", {{"amplitude", 0.3}});
    for (double t : {0.0, 0.1, 0.3}) {
        for (double x : {0.1, 0.45, 0.8}) {
            const double u = ic.reference(x, t)[0];
            const double u0 = ic.at(x - u * t)[0];
            CHECK(std::abs(u - u0) < 1e-12);
        }
    }
}

TEST_CASE("euler density pulse is an exact advecting contact") {
    auto sys = make_system("euler");
    const InitialCondition ic = make_initial_condition(*sys, "density_pulse", {});
    const State q0 = ic.reference(0.5, 0.0);
    const State qt = ic.reference(0.5 + 0.5 * 0.2, 0.2);  // default velocity 0.5
    CHECK(qt[0] == doctest::Approx(q0[0]).epsilon(1e-14));   // density advected
    sys->check_admissible(q0);
    sys->check_admissible(qt);
}

TEST_CASE("unknown initial conditions are rejected") {
    auto sys = make_system("burgers");
    CHECK_THROWS_AS(make_initial_condition(*sys, "square_wave", {}), ValidationError);
    auto sw = make_system("shallow_water");
    const InitialCondition lake = make_initial_condition(*sw, "lake_at_rest", {});
    CHECK(lake.at(0.3)[0] == 1.0);
    CHECK(lake.reference(0.3, 5.0)[1] == 0.0);
}
