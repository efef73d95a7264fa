#include "overset/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace overset {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::string& where,
                         const std::set<std::string>& known) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!known.count(it.key()))
            throw ValidationError("unknown key '" + where + "." + it.key() + "'");
}

std::map<std::string, double> parse_param_map(const json& obj, const std::string& where) {
    std::map<std::string, double> params;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!it.value().is_number())
            throw ValidationError("parameter '" + where + "." + it.key() + "' must be a number");
        params[it.key()] = it.value().get<double>();
    }
    return params;
}

double get_number(const json& obj, const std::string& where, const std::string& key,
                  double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number())
        throw ValidationError("key '" + where + "." + key + "' must be a number");
    return obj[key].get<double>();
}

int get_int(const json& obj, const std::string& where, const std::string& key, int fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number_integer())
        throw ValidationError("key '" + where + "." + key + "' must be an integer");
    return obj[key].get<int>();
}

std::string get_string(const json& obj, const std::string& where, const std::string& key,
                       const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_string())
        throw ValidationError("key '" + where + "." + key + "' must be a string");
    return obj[key].get<std::string>();
}

RunConfig from_json(const json& root) {
    RunConfig config;
    reject_unknown_keys(root, "",
                        {"system", "geometry", "grids", "interpolation", "penalties",
                         "integrator", "initial_condition", "bc", "output"});

    if (root.contains("system")) {
        const json& sys = root["system"];
        reject_unknown_keys(sys, "system", {"name", "parameters"});
        config.system_name = get_string(sys, "system", "name", config.system_name);
        if (sys.contains("parameters"))
            config.system_params = parse_param_map(sys["parameters"], "system.parameters");
    }

    if (root.contains("geometry")) {
        const json& g = root["geometry"];
        reject_unknown_keys(g, "geometry", {"a", "b", "c", "d", "eta"});
        config.geometry.a = get_number(g, "geometry", "a", config.geometry.a);
        config.geometry.b = get_number(g, "geometry", "b", config.geometry.b);
        config.geometry.c = get_number(g, "geometry", "c", config.geometry.c);
        config.geometry.d = get_number(g, "geometry", "d", config.geometry.d);
        config.geometry.eta = get_number(g, "geometry", "eta", config.geometry.eta);
    }

    if (root.contains("grids")) {
        const json& g = root["grids"];
        reject_unknown_keys(g, "grids", {"n_u", "n_v"});
        config.n_u = get_int(g, "grids", "n_u", config.n_u);
        config.n_v = get_int(g, "grids", "n_v", config.n_v);
    }

    if (root.contains("interpolation")) {
        const json& ip = root["interpolation"];
        reject_unknown_keys(ip, "interpolation", {"mode", "order"});
        const std::string mode = get_string(ip, "interpolation", "mode", "exact_node");
        if (mode == "exact_node")
            config.interp.mode = InterpolationOperator::Mode::exact_node;
        else if (mode == "lagrange")
            config.interp.mode = InterpolationOperator::Mode::lagrange;
        else
            throw ValidationError("interpolation.mode must be 'exact_node' or 'lagrange'");
        config.interp.order = get_int(ip, "interpolation", "order", config.interp.order);
    }

    if (root.contains("penalties")) {
        const json& p = root["penalties"];
        reject_unknown_keys(p, "penalties", {"kappa", "interior_points", "sigma"});
        config.kappa = get_number(p, "penalties", "kappa", config.kappa);
        config.interior_count = get_int(p, "penalties", "interior_points", config.interior_count);
        config.sigma = get_number(p, "penalties", "sigma", config.sigma);
    }

    if (root.contains("integrator")) {
        const json& it = root["integrator"];
        reject_unknown_keys(it, "integrator", {"method", "cfl", "dt", "t_final"});
        const std::string method = get_string(it, "integrator", "method", "ssprk3");
        if (method == "ssprk3")
            config.integrator.method = IntegratorConfig::Method::ssprk3;
        else if (method == "rk4")
            config.integrator.method = IntegratorConfig::Method::rk4;
        else
            throw ValidationError("integrator.method must be 'ssprk3' or 'rk4'");
        config.integrator.cfl = get_number(it, "integrator", "cfl", config.integrator.cfl);
        config.integrator.t_final =
            get_number(it, "integrator", "t_final", config.integrator.t_final);
        if (it.contains("dt")) config.integrator.fixed_dt = get_number(it, "integrator", "dt", 0.0);
    }

    if (root.contains("initial_condition")) {
        const json& ic = root["initial_condition"];
        reject_unknown_keys(ic, "initial_condition", {"name", "parameters"});
        config.ic_name = get_string(ic, "initial_condition", "name", config.ic_name);
        if (ic.contains("parameters"))
            config.ic_params =
                parse_param_map(ic["parameters"], "initial_condition.parameters");
    }

    if (root.contains("bc")) {
        const json& bc = root["bc"];
        reject_unknown_keys(bc, "bc", {"kind"});
        const std::string kind = get_string(bc, "bc", "kind", "dirichlet_exact");
        if (kind == "dirichlet_exact")
            config.bc_kind = BoundaryCondition::Kind::dirichlet_exact;
        else if (kind == "reflective_none")
            config.bc_kind = BoundaryCondition::Kind::reflective_none;
        else
            throw ValidationError("bc.kind must be 'dirichlet_exact' or 'reflective_none'");
    }

    if (root.contains("output")) {
        const json& out = root["output"];
        reject_unknown_keys(out, "output", {"directory", "cadence"});
        config.output_dir = get_string(out, "output", "directory", config.output_dir);
        config.output_cadence = get_int(out, "output", "cadence", config.output_cadence);
    }

    config.validate();
    return config;
}

}  // namespace

void RunConfig::validate() const {
    make_system(system_name, system_params);  // throws on unknown name/params
    geometry.validate();
    if (n_u < 4 || n_v < 4) throw ValidationError("grids.n_u and grids.n_v must be >= 4");
    if (interp.order < 0) throw ValidationError("interpolation.order must be >= 0");
    if (kappa < 0.0) throw ValidationError("penalties.kappa must be >= 0");
    if (interior_count < 0) throw ValidationError("penalties.interior_points must be >= 0");
    if (interior_count > 0 && !(sigma > 0.0))
        throw ValidationError("penalties.sigma must be positive when interior points are used");
    integrator.validate();
    if (output_cadence < 1) throw ValidationError("output.cadence must be >= 1");
}

RunConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& err) {
        throw ValidationError(std::string("config parse error: ") + err.what());
    }
    return from_json(root);
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("config file does not exist: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string serialize_config(const RunConfig& config) {
    json root;
    root["system"] = {{"name", config.system_name}, {"parameters", config.system_params}};
    root["geometry"] = {{"a", config.geometry.a},
                        {"b", config.geometry.b},
                        {"c", config.geometry.c},
                        {"d", config.geometry.d},
                        {"eta", config.geometry.eta}};
    root["grids"] = {{"n_u", config.n_u}, {"n_v", config.n_v}};
    root["interpolation"] = {
        {"mode", config.interp.mode == InterpolationOperator::Mode::exact_node ? "exact_node"
                                                                               : "lagrange"},
        {"order", config.interp.order}};
    root["penalties"] = {{"kappa", config.kappa},
                         {"interior_points", config.interior_count},
                         {"sigma", config.sigma}};
    root["integrator"] = {
        {"method",
         config.integrator.method == IntegratorConfig::Method::ssprk3 ? "ssprk3" : "rk4"},
        {"cfl", config.integrator.cfl},
        {"t_final", config.integrator.t_final}};
    if (config.integrator.fixed_dt) root["integrator"]["dt"] = *config.integrator.fixed_dt;
    root["initial_condition"] = {{"name", config.ic_name}, {"parameters", config.ic_params}};
    root["bc"] = {{"kind", config.bc_kind == BoundaryCondition::Kind::dirichlet_exact
                               ? "dirichlet_exact"
                               : "reflective_none"}};
    root["output"] = {{"directory", config.output_dir}, {"cadence", config.output_cadence}};
    return root.dump(2) + "\n";
}

namespace {

double param(const std::map<std::string, double>& params, const std::string& key,
             double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

/// Solves u = u0(x - u t) by Newton iteration; valid before characteristics
/// cross (pre-shock).
double characteristic_solve(const std::function<double(double)>& u0,
                            const std::function<double(double)>& du0, double x, double t) {
    double u = u0(x);
    for (int iter = 0; iter < 100; ++iter) {
        const double xi = x - u * t;
        const double g = u - u0(xi);
        const double dg = 1.0 + t * du0(xi);
        const double step = g / dg;
        u -= step;
        if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(u))) return u;
    }
    throw std::runtime_error(
        "characteristic solve for the exact Burgers solution did not converge "
        "(post-shock time?)");
}

}  // namespace

InitialCondition make_initial_condition(const ConservationLawSystem& sys,
                                        const std::string& name,
                                        const std::map<std::string, double>& params) {
    InitialCondition ic;
    const std::string system(sys.name());

    if (system == "burgers") {
        std::function<double(double)> profile, slope;
        if (name == "sine") {
            const double mean = param(params, "mean", 1.0);
            const double amplitude = param(params, "amplitude", 0.3);
            const double wavelength = param(params, "wavelength", 1.0);
            const double x0 = param(params, "x0", 0.0);
            const double k = 2.0 * M_PI / wavelength;
            profile = [=](double x) { return mean + amplitude * std::sin(k * (x - x0)); };
            slope = [=](double x) { return amplitude * k * std::cos(k * (x - x0)); };
        } else if (name == "gauss_pulse") {
            const double background = param(params, "background", 0.0);
            const double amplitude = param(params, "amplitude", 0.5);
            const double x0 = param(params, "x0", 0.5);
            const double width = param(params, "width", 0.08);
            profile = [=](double x) {
                const double z = (x - x0) / width;
                return background + amplitude * std::exp(-z * z);
            };
            slope = [=](double x) {
                const double z = (x - x0) / width;
                return amplitude * std::exp(-z * z) * (-2.0 * z / width);
            };
        } else {
            throw ValidationError("unknown burgers initial condition '" + name + "'");
        }
        ic.at = [profile](double x) { return State{profile(x)}; };
        ic.reference = [profile, slope](double x, double t) {
            return State{characteristic_solve(profile, slope, x, t)};
        };
        return ic;
    }

    if (system == "shallow_water") {
        if (name == "lake_at_rest") {
            const double depth = param(params, "depth", 1.0);
            ic.at = [depth](double) { return State{depth, 0.0}; };
            ic.reference = [depth](double, double) { return State{depth, 0.0}; };
            return ic;
        }
        if (name == "gauss_pulse") {
            const double depth = param(params, "depth", 1.0);
            const double amplitude = param(params, "amplitude", 0.1);
            const double x0 = param(params, "x0", 0.5);
            const double width = param(params, "width", 0.08);
            ic.at = [=](double x) {
                const double z = (x - x0) / width;
                return State{depth + amplitude * std::exp(-z * z), 0.0};
            };
            return ic;  // no closed-form reference
        }
        throw ValidationError("unknown shallow_water initial condition '" + name + "'");
    }

    if (system == "euler") {
        if (name == "density_pulse") {
            const double rho0 = param(params, "rho0", 1.0);
            const double amplitude = param(params, "amplitude", 0.2);
            const double x0 = param(params, "x0", 0.5);
            const double width = param(params, "width", 0.08);
            const double velocity = param(params, "velocity", 0.5);
            const double pressure = param(params, "pressure", 1.0);
            const double gamma = sys.parameters().at("gamma");
            // an advecting contact: u and p stay constant, density rides along
            auto state_at = [=](double x, double t) {
                const double z = (x - velocity * t - x0) / width;
                const double rho = rho0 + amplitude * std::exp(-z * z);
                return State{rho, rho * velocity,
                             pressure / (gamma - 1.0) + 0.5 * rho * velocity * velocity};
            };
            ic.at = [state_at](double x) { return state_at(x, 0.0); };
            ic.reference = state_at;
            return ic;
        }
        if (name == "vacuum") {
            ic.at = [](double) { return State{1e-30, 0.0, 1e-30}; };
            return ic;
        }
        throw ValidationError("unknown euler initial condition '" + name + "'");
    }

    throw ValidationError("no initial conditions registered for system '" + system + "'");
}

}  // namespace overset
