#include "overset/systems.hpp"

#include <cmath>
#include <sstream>

namespace overset {

namespace {

constexpr double kPositivityFloor = 1e-12;  // reject h, rho, p below this

double mean(double a, double b) { return 0.5 * (a + b); }

/// Logarithmic mean (a-b)/(ln a - ln b) for a, b > 0.
/// Series branch for nearly equal arguments; both branches are bitwise
/// symmetric in (a, b) since they only combine a+b, a-b and squares.
double log_mean(double a, double b) {
    const double sum = a + b;
    const double diff = a - b;
    const double r = diff / sum;
    const double r2 = r * r;
    if (r2 < 1e-4) {
        // ln(a/b) = 2r(1 + r^2/3 + r^4/5 + r^6/7 + ...); truncation < 1e-17 relative
        return sum / (2.0 * (1.0 + r2 / 3.0 + r2 * r2 / 5.0 + r2 * r2 * r2 / 7.0));
    }
    return diff / (std::log(a) - std::log(b));
}

void require_finite(const State& q, const char* system) {
    if (!q.all_finite())
        throw AdmissibilityError(std::string(system) + ": state has non-finite entries");
}

// ---------------------------------------------------------------------------
// Burgers: q = [w], f = w^2/2, (s, f_eps) = (w^2/2, w^3/3), w = q, psi = w^3/6,
// f_ec(u,v) = (u^2 + uv + v^2)/6.
// ---------------------------------------------------------------------------
class BurgersSystem final : public ConservationLawSystem {
public:
    std::string_view name() const override { return "burgers"; }
    int num_components() const override { return 1; }

    void check_admissible(const State& q) const override { require_finite(q, "burgers"); }

    State physical_flux(const State& q) const override {
        check_admissible(q);
        return State{0.5 * q[0] * q[0]};
    }

    double entropy(const State& q) const override {
        check_admissible(q);
        return 0.5 * q[0] * q[0];
    }

    double entropy_flux(const State& q) const override {
        check_admissible(q);
        return q[0] * q[0] * q[0] / 3.0;
    }

    State entropy_variables(const State& q) const override {
        check_admissible(q);
        return q;
    }

    double entropy_potential(const State& q) const override {
        check_admissible(q);
        return q[0] * q[0] * q[0] / 6.0;
    }

    double max_wave_speed(const State& q) const override {
        check_admissible(q);
        return std::abs(q[0]);
    }

    AdmissibleBox sample_box() const override {
        return {State{-3.0}, State{3.0}};
    }

protected:
    State ec_flux_distinct(const State& qL, const State& qR) const override {
        const double u = qL[0];
        const double v = qR[0];
        // grouped so the expression is bitwise symmetric under (u,v) swap
        return State{((u * u + v * v) + u * v) / 6.0};
    }
};

// ---------------------------------------------------------------------------
// Shallow water: q = [h, hu], f = (hu, hu^2 + g h^2/2),
// s = m^2/(2h) + g h^2/2, f_eps = h u^3/2 + g h^2 u,
// w = (g h - u^2/2, u), psi = g h^2 u / 2.
// f_ec = ({{h}}{{u}}, {{h}}{{u}}^2 + g {{h^2}}/2).
// ---------------------------------------------------------------------------
class ShallowWaterSystem final : public ConservationLawSystem {
public:
    explicit ShallowWaterSystem(double g) : g_(g) {
        if (!(g > 0.0)) throw ValidationError("shallow_water: g must be positive");
    }

    std::string_view name() const override { return "shallow_water"; }
    int num_components() const override { return 2; }

    std::map<std::string, double> parameters() const override { return {{"g", g_}}; }

    void check_admissible(const State& q) const override {
        require_finite(q, "shallow_water");
        if (!(q[0] > kPositivityFloor))
            throw AdmissibilityError("shallow_water: water depth h must exceed 1e-12");
    }

    State physical_flux(const State& q) const override {
        check_admissible(q);
        const double h = q[0];
        const double u = q[1] / h;
        return State{q[1], q[1] * u + 0.5 * g_ * h * h};
    }

    double entropy(const State& q) const override {
        check_admissible(q);
        const double h = q[0];
        return 0.5 * q[1] * q[1] / h + 0.5 * g_ * h * h;
    }

    double entropy_flux(const State& q) const override {
        check_admissible(q);
        const double h = q[0];
        const double u = q[1] / h;
        return 0.5 * h * u * u * u + g_ * h * h * u;
    }

    State entropy_variables(const State& q) const override {
        check_admissible(q);
        const double h = q[0];
        const double u = q[1] / h;
        return State{g_ * h - 0.5 * u * u, u};
    }

    double entropy_potential(const State& q) const override {
        check_admissible(q);
        const double h = q[0];
        const double u = q[1] / h;
        return 0.5 * g_ * h * h * u;
    }

    double max_wave_speed(const State& q) const override {
        check_admissible(q);
        const double h = q[0];
        return std::abs(q[1] / h) + std::sqrt(g_ * h);
    }

    AdmissibleBox sample_box() const override {
        // h in [0.3, 3], u in [-2, 2] encoded through hu bounds at sampling time
        return {State{0.3, -2.0}, State{3.0, 2.0}};
    }

    double gravity() const { return g_; }

protected:
    State ec_flux_distinct(const State& qL, const State& qR) const override {
        const double hL = qL[0], hR = qR[0];
        const double uL = qL[1] / hL, uR = qR[1] / hR;
        const double h_avg = mean(hL, hR);
        const double u_avg = mean(uL, uR);
        const double h2_avg = mean(hL * hL, hR * hR);
        return State{h_avg * u_avg, h_avg * u_avg * u_avg + 0.5 * g_ * h2_avg};
    }

private:
    double g_;
};

// ---------------------------------------------------------------------------
// Euler: q = [rho, rho u, E], p = (gamma-1)(E - rho u^2/2),
// s = -rho sigma/(gamma-1) with sigma = ln p - gamma ln rho, f_eps = u s,
// w = ((gamma - sigma)/(gamma-1) - beta u^2, 2 beta u, -2 beta),
// beta = rho/(2p), psi = rho u.
// f_ec: log-mean kinetic-energy and entropy consistent flux
//   frho = rho_ln {{u}},  fm = p_tilde + {{u}} frho,
//   fE = (1/(2(gamma-1) beta_ln) - {{u^2}}/2) frho + {{u}} fm,
// with p_tilde = {{rho}}/(2{{beta}}).
// ---------------------------------------------------------------------------
class EulerSystem final : public ConservationLawSystem {
public:
    explicit EulerSystem(double gamma) : gamma_(gamma) {
        if (!(gamma > 1.0)) throw ValidationError("euler: gamma must exceed 1");
    }

    std::string_view name() const override { return "euler"; }
    int num_components() const override { return 3; }

    std::map<std::string, double> parameters() const override { return {{"gamma", gamma_}}; }

    double pressure(const State& q) const {
        return (gamma_ - 1.0) * (q[2] - 0.5 * q[1] * q[1] / q[0]);
    }

    void check_admissible(const State& q) const override {
        require_finite(q, "euler");
        if (!(q[0] > kPositivityFloor))
            throw AdmissibilityError("euler: density rho must exceed 1e-12");
        if (!(pressure(q) > kPositivityFloor))
            throw AdmissibilityError("euler: pressure p(rho,rho u,E) must exceed 1e-12");
    }

    State physical_flux(const State& q) const override {
        check_admissible(q);
        const double u = q[1] / q[0];
        const double p = pressure(q);
        return State{q[1], q[1] * u + p, u * (q[2] + p)};
    }

    double entropy(const State& q) const override {
        check_admissible(q);
        return -q[0] * specific_entropy(q) / (gamma_ - 1.0);
    }

    double entropy_flux(const State& q) const override {
        check_admissible(q);
        // f_eps = u * s = -(rho u) sigma / (gamma - 1)
        return -q[1] * specific_entropy(q) / (gamma_ - 1.0);
    }

    State entropy_variables(const State& q) const override {
        check_admissible(q);
        const double rho = q[0];
        const double u = q[1] / rho;
        const double p = pressure(q);
        const double sigma = specific_entropy(q);
        const double beta = 0.5 * rho / p;
        return State{(gamma_ - sigma) / (gamma_ - 1.0) - beta * u * u, 2.0 * beta * u,
                     -2.0 * beta};
    }

    double entropy_potential(const State& q) const override {
        check_admissible(q);
        return q[1];  // psi = rho u
    }

    double max_wave_speed(const State& q) const override {
        check_admissible(q);
        return std::abs(q[1] / q[0]) + std::sqrt(gamma_ * pressure(q) / q[0]);
    }

    AdmissibleBox sample_box() const override {
        // (rho, u, p) boxes; converted to conservative variables when sampling
        return {State{0.3, -2.0, 0.3}, State{3.0, 2.0, 3.0}};
    }

    double gamma() const { return gamma_; }

protected:
    State ec_flux_distinct(const State& qL, const State& qR) const override {
        const double rhoL = qL[0], rhoR = qR[0];
        const double uL = qL[1] / rhoL, uR = qR[1] / rhoR;
        const double pL = pressure(qL), pR = pressure(qR);
        const double betaL = 0.5 * rhoL / pL, betaR = 0.5 * rhoR / pR;

        const double rho_ln = log_mean(rhoL, rhoR);
        const double beta_ln = log_mean(betaL, betaR);
        const double rho_avg = mean(rhoL, rhoR);
        const double beta_avg = mean(betaL, betaR);
        const double u_avg = mean(uL, uR);
        const double u2_avg = mean(uL * uL, uR * uR);

        const double p_tilde = 0.5 * rho_avg / beta_avg;
        const double f_rho = rho_ln * u_avg;
        const double f_m = p_tilde + u_avg * f_rho;
        const double f_E =
            (0.5 / ((gamma_ - 1.0) * beta_ln) - 0.5 * u2_avg) * f_rho + u_avg * f_m;
        return State{f_rho, f_m, f_E};
    }

private:
    double specific_entropy(const State& q) const {
        return std::log(pressure(q)) - gamma_ * std::log(q[0]);
    }

    double gamma_;
};

double map_get(const std::map<std::string, double>& m, const std::string& key, double fallback) {
    auto it = m.find(key);
    return it == m.end() ? fallback : it->second;
}

}  // namespace

State ConservationLawSystem::ec_flux(const State& qL, const State& qR) const {
    check_admissible(qL);
    check_admissible(qR);
    // equal states take the identical arithmetic path as f so that penalties
    // built from f_ec - f vanish exactly
    if (qL == qR) return physical_flux(qL);
    return ec_flux_distinct(qL, qR);
}

JumpReport ConservationLawSystem::jump_condition_residual(const State& qL,
                                                          const State& qR) const {
    const State w_jump = entropy_variables(qL) - entropy_variables(qR);
    const double psiL = entropy_potential(qL);
    const double psiR = entropy_potential(qR);
    JumpReport report;
    report.left = qL;
    report.right = qR;
    report.residual = w_jump.dot(ec_flux(qL, qR)) - (psiL - psiR);
    report.relative_scale = std::max({std::abs(psiL), std::abs(psiR), 1.0});
    return report;
}

double ConservationLawSystem::numerical_entropy_flux(const State& qL, const State& qR) const {
    const State w_avg = 0.5 * (entropy_variables(qL) + entropy_variables(qR));
    const double psi_avg = 0.5 * (entropy_potential(qL) + entropy_potential(qR));
    return w_avg.dot(ec_flux(qL, qR)) - psi_avg;
}

State ConservationLawSystem::sample_admissible(std::mt19937_64& rng) const {
    const AdmissibleBox box = sample_box();
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int p = num_components();
    State primitive = State::zero(p);
    for (int i = 0; i < p; ++i) primitive[i] = box.lo[i] + (box.hi[i] - box.lo[i]) * unit(rng);

    if (name() == "shallow_water") {
        // box holds (h, u); convert to (h, hu)
        return State{primitive[0], primitive[0] * primitive[1]};
    }
    if (name() == "euler") {
        // box holds (rho, u, p); convert to (rho, rho u, E)
        const auto* euler = static_cast<const EulerSystem*>(this);
        const double rho = primitive[0], u = primitive[1], p_ = primitive[2];
        return State{rho, rho * u, p_ / (euler->gamma() - 1.0) + 0.5 * rho * u * u};
    }
    return primitive;
}

std::unique_ptr<ConservationLawSystem> make_system(
    const std::string& name, const std::map<std::string, double>& parameters) {
    for (const auto& [key, value] : parameters) {
        (void)value;
        if (key != "g" && key != "gamma")
            throw ValidationError("unknown system parameter '" + key + "'");
    }
    if (name == "burgers") return std::make_unique<BurgersSystem>();
    if (name == "shallow_water")
        return std::make_unique<ShallowWaterSystem>(map_get(parameters, "g", 9.81));
    if (name == "euler")
        return std::make_unique<EulerSystem>(map_get(parameters, "gamma", 1.4));
    throw ValidationError("unknown system '" + name +
                          "' (expected burgers, shallow_water or euler)");
}

}  // namespace overset
