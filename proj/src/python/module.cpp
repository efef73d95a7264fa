#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "overset/coupling.hpp"
#include "overset/runner.hpp"

namespace py = pybind11;
using namespace overset;

namespace {

State to_state(const std::vector<double>& values) {
    if (values.empty() || values.size() > static_cast<std::size_t>(kMaxComponents))
        throw ValidationError("state must have 1..3 components");
    State q = State::zero(static_cast<int>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) q[static_cast<int>(i)] = values[i];
    return q;
}

std::vector<double> from_state(const State& q) {
    std::vector<double> out(static_cast<std::size_t>(q.size()));
    for (int i = 0; i < q.size(); ++i) out[static_cast<std::size_t>(i)] = q[i];
    return out;
}

InterfaceSide side_from_string(const std::string& side) {
    if (side == "b" || side == "B") return InterfaceSide{InterfaceSide::B};
    if (side == "c" || side == "C") return InterfaceSide{InterfaceSide::C};
    throw ValidationError("interface side must be 'b' or 'c'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Entropy-bounded overset-domain formulation for 1D conservation laws";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<AdmissibilityError>(m, "AdmissibilityError", PyExc_ValueError);

    py::class_<ConservationLawSystem, std::unique_ptr<ConservationLawSystem>>(m, "System")
        .def_property_readonly("name",
                               [](const ConservationLawSystem& s) { return std::string(s.name()); })
        .def_property_readonly("num_components", &ConservationLawSystem::num_components)
        .def_property_readonly("parameters", &ConservationLawSystem::parameters)
        .def("physical_flux",
             [](const ConservationLawSystem& s, const std::vector<double>& q) {
                 return from_state(s.physical_flux(to_state(q)));
             })
        .def("entropy",
             [](const ConservationLawSystem& s, const std::vector<double>& q) {
                 return s.entropy(to_state(q));
             })
        .def("entropy_flux",
             [](const ConservationLawSystem& s, const std::vector<double>& q) {
                 return s.entropy_flux(to_state(q));
             })
        .def("entropy_variables",
             [](const ConservationLawSystem& s, const std::vector<double>& q) {
                 return from_state(s.entropy_variables(to_state(q)));
             })
        .def("entropy_potential",
             [](const ConservationLawSystem& s, const std::vector<double>& q) {
                 return s.entropy_potential(to_state(q));
             })
        .def("ec_flux",
             [](const ConservationLawSystem& s, const std::vector<double>& qL,
                const std::vector<double>& qR) {
                 return from_state(s.ec_flux(to_state(qL), to_state(qR)));
             })
        .def("numerical_entropy_flux",
             [](const ConservationLawSystem& s, const std::vector<double>& qL,
                const std::vector<double>& qR) {
                 return s.numerical_entropy_flux(to_state(qL), to_state(qR));
             })
        .def("jump_condition_residual",
             [](const ConservationLawSystem& s, const std::vector<double>& qL,
                const std::vector<double>& qR) {
                 const JumpReport rep = s.jump_condition_residual(to_state(qL), to_state(qR));
                 return py::dict(py::arg("residual") = rep.residual,
                                 py::arg("relative_scale") = rep.relative_scale);
             })
        .def("max_wave_speed", [](const ConservationLawSystem& s, const std::vector<double>& q) {
            return s.max_wave_speed(to_state(q));
        });

    m.def(
        "make_system",
        [](const std::string& name, const std::map<std::string, double>& parameters) {
            return make_system(name, parameters);
        },
        py::arg("name"), py::arg("parameters") = std::map<std::string, double>{});

    m.def(
        "beta",
        [](const std::string& side, double eta) { return beta(side_from_string(side), eta); },
        py::arg("side"), py::arg("eta"));
    m.def(
        "penalty_u",
        [](const ConservationLawSystem& sys, const std::string& side, double eta,
           const std::vector<double>& q_u, const std::vector<double>& q_v) {
            return from_state(
                penalty_u(sys, side_from_string(side), eta, to_state(q_u), to_state(q_v)));
        },
        py::arg("sys"), py::arg("side"), py::arg("eta"), py::arg("q_u"), py::arg("q_v"));
    m.def(
        "penalty_v",
        [](const ConservationLawSystem& sys, const std::string& side, double eta,
           const std::vector<double>& q_u, const std::vector<double>& q_v) {
            return from_state(
                penalty_v(sys, side_from_string(side), eta, to_state(q_u), to_state(q_v)));
        },
        py::arg("sys"), py::arg("side"), py::arg("eta"), py::arg("q_u"), py::arg("q_v"));
    m.def(
        "conservation_residual",
        [](const ConservationLawSystem& sys, const std::string& side, double eta,
           const std::vector<double>& q_u, const std::vector<double>& q_v) {
            return from_state(conservation_residual(sys, side_from_string(side), eta,
                                                    to_state(q_u), to_state(q_v)));
        },
        py::arg("sys"), py::arg("side"), py::arg("eta"), py::arg("q_u"), py::arg("q_v"));
    m.def(
        "entropy_budget_B",
        [](const ConservationLawSystem& sys, const std::string& side, double eta,
           const std::vector<double>& q_u, const std::vector<double>& q_v, double kappa) {
            return entropy_budget_B(sys, side_from_string(side), eta, to_state(q_u),
                                    to_state(q_v), kappa);
        },
        py::arg("sys"), py::arg("side"), py::arg("eta"), py::arg("q_u"), py::arg("q_v"),
        py::arg("kappa") = 0.0);

    m.def(
        "run",
        [](const std::string& config_json, const std::string& out_dir) {
            const RunConfig config = parse_config(config_json);
            const RunSummary summary = run(config, out_dir.empty() ? config.output_dir : out_dir);
            return py::dict(
                py::arg("steps") = summary.steps, py::arg("final_time") = summary.final_time,
                py::arg("final_S_bar") = summary.final_S_bar,
                py::arg("max_entropy_rate_residual") = summary.max_entropy_rate_residual,
                py::arg("max_conservation_rate_residual") =
                    summary.max_conservation_rate_residual,
                py::arg("files_written") = summary.files_written);
        },
        py::arg("config_json"), py::arg("out_dir") = std::string{},
        "Run a simulation from a JSON config string; returns a summary dict.");

    m.def(
        "run_equivalence",
        [](const std::string& config_json) {
            const EquivalenceReport report = run_equivalence(parse_config(config_json));
            return py::dict(py::arg("steps") = report.steps,
                            py::arg("max_difference") = report.max_difference);
        },
        py::arg("config_json"));

    m.def(
        "run_convergence",
        [](const std::string& config_json, int levels) {
            const auto table = run_convergence(parse_config(config_json), levels);
            py::list rows;
            for (const auto& row : table)
                rows.append(py::dict(py::arg("n_u") = row.n_u,
                                     py::arg("error_l2") = row.error_l2,
                                     py::arg("observed_order") = row.observed_order));
            return rows;
        },
        py::arg("config_json"), py::arg("levels") = 4);

    m.def(
        "verify_fluxes",
        [](std::uint64_t seed, int pairs) {
            py::list rows;
            for (const auto& row : verify_fluxes(seed, pairs))
                rows.append(py::dict(py::arg("system") = row.system, py::arg("pairs") = row.pairs,
                                     py::arg("max_jump_residual") = row.max_jump_residual,
                                     py::arg("max_consistency") = row.max_consistency,
                                     py::arg("max_asymmetry") = row.max_asymmetry));
            return rows;
        },
        py::arg("seed") = 20240817, py::arg("pairs") = 10000);
}
