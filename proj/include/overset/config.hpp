/// @file config.hpp
/// @brief Run configuration: JSON schema, validation, initial conditions.

#ifndef OVERSET_CONFIG_HPP
#define OVERSET_CONFIG_HPP

#include <map>
#include <string>

#include "overset/geometry.hpp"
#include "overset/spatial.hpp"
#include "overset/timeint.hpp"

namespace overset {

/// Full description of one simulation. See README for the JSON schema.
/// Unknown keys are rejected; every module-level invariant is re-validated at
/// load time.
struct RunConfig {
    std::string system_name = "burgers";
    std::map<std::string, double> system_params;

    OversetGeometry1D geometry{0.0, 0.375, 0.625, 1.0, 0.5};
    int n_u = 64;
    int n_v = 64;

    InterpolationOperator interp{InterpolationOperator::Mode::exact_node, 3};

    double kappa = 0.0;
    int interior_count = 0;  // M
    double sigma = 1.0;      // Sigma_u = sigma * I at each interior point

    IntegratorConfig integrator;

    std::string ic_name = "sine";
    std::map<std::string, double> ic_params;

    BoundaryCondition::Kind bc_kind = BoundaryCondition::Kind::dirichlet_exact;

    std::string output_dir = "out";
    int output_cadence = 1;  // ledger row every this many steps

    void validate() const;
};

/// Parses and validates a config file. Throws ValidationError with the
/// offending key on parse/validation failure.
RunConfig load_config(const std::string& path);

/// Parses a config from a JSON string (same schema as load_config).
RunConfig parse_config(const std::string& json_text);

/// Canonical JSON serialization; load -> serialize -> load is a fixed point.
std::string serialize_config(const RunConfig& config);

/// Initial data and, when available in closed form, the exact reference
/// solution used for dirichlet_exact boundaries and error measurement.
struct InitialCondition {
    std::function<State(double)> at;                  // t = 0
    std::function<State(double, double)> reference;   // null when no closed form exists
};

/// Named initial conditions per system:
///   burgers:       "sine", "gauss_pulse" (exact pre-shock characteristic solution)
///   shallow_water: "lake_at_rest" (exact), "gauss_pulse" (no reference)
///   euler:         "density_pulse" (exact advecting contact), "vacuum" (inadmissible;
///                  exercises the abort path)
InitialCondition make_initial_condition(const ConservationLawSystem& sys,
                                        const std::string& name,
                                        const std::map<std::string, double>& params);

}  // namespace overset

#endif
