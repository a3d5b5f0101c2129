#include "legalmkt/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace legalmkt {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0)) {
        throw std::domain_error(std::string(name) + " must be positive");
    }
}

} // namespace

void ModelParamsClassic::validate() const {
    require_positive(gamma_disutility, "gamma_disutility");
    require_positive(rho_s, "rho_s");
    require_positive(rho_u, "rho_u");
    require_positive(delta, "delta");
    require_positive(a_s, "a_s");
    require_positive(a_u, "a_u");
    require_positive(sigma_curv, "sigma_curv");
    if (!(beta_disc > 0.0 && beta_disc < 1.0)) {
        throw std::domain_error("beta_disc must lie in (0,1)");
    }
}

void ModelParamsGmm::validate() const {
    if (!(share_lambda > 0.0 && share_lambda < 1.0)) {
        throw std::domain_error("share_lambda must lie in (0,1)");
    }
    if (!(zeta < 1.0)) throw std::domain_error("zeta must be < 1");
    require_positive(a_rel, "a_rel");
    require_positive(alpha, "alpha");
    require_positive(rho_s, "rho_s");
    require_positive(rho_u, "rho_u");
    require_positive(sigma_curv, "sigma_curv");
    if (!(beta_disc > 0.0 && beta_disc < 1.0)) {
        throw std::domain_error("beta_disc must lie in (0,1)");
    }
}

void DemandParams::validate() const {
    require_positive(l_bar_county, "l_bar_county");
    require_positive(phi_fees, "phi_fees");
    require_positive(shock_scale, "shock_scale");
    if (l_other < 0.0) throw std::domain_error("l_other must be nonnegative");
    if (l_bar_br < 0.0) throw std::domain_error("l_bar_br must be nonnegative");
}

double labor_supply(double wage, double rho, double gamma_disutility) {
    require_positive(wage, "wage");
    require_positive(rho, "rho");
    require_positive(gamma_disutility, "gamma_disutility");
    return std::pow(wage / gamma_disutility, 1.0 / rho);
}

double frisch_elasticity(double rho) {
    require_positive(rho, "rho");
    return 1.0 / rho;
}

double ces_output_classic(double n_s, double n_u, const ModelParamsClassic& p) {
    require_positive(n_s, "n_s");
    require_positive(n_u, "n_u");
    if (p.delta == 1.0) {
        throw std::domain_error("ces_output_classic: delta = 1 (Cobb-Douglas limit) unsupported");
    }
    double e = (p.delta - 1.0) / p.delta;
    double inner = std::pow(p.a_u * n_u, e) + std::pow(p.a_s * n_s, e);
    return std::pow(inner, 1.0 / e);
}

double ces_output_gmm(double n_s, double n_u, double theta, const ModelParamsGmm& p) {
    require_positive(n_s, "n_s");
    require_positive(n_u, "n_u");
    require_positive(theta, "theta");
    if (p.zeta == 0.0) {
        throw std::domain_error("ces_output_gmm: zeta = 0 (Cobb-Douglas limit) unsupported");
    }
    double inner = (1.0 - p.share_lambda) * std::pow(n_u, p.zeta) +
                   p.share_lambda * std::pow(p.a_rel * n_s, p.zeta);
    return theta * std::pow(inner, p.alpha / p.zeta);
}

std::pair<double, double> wages_classic(double n_s, double n_u, const ModelParamsClassic& p) {
    double l = ces_output_classic(n_s, n_u, p);
    double e = (p.delta - 1.0) / p.delta;
    double w_s = std::pow(p.a_s, e) * std::pow(l / n_s, 1.0 / p.delta);
    double w_u = std::pow(p.a_u, e) * std::pow(l / n_u, 1.0 / p.delta);
    return {w_s, w_u};
}

std::pair<double, double> wages_gmm(double n_s, double n_u, double theta, const ModelParamsGmm& p) {
    require_positive(n_s, "n_s");
    require_positive(n_u, "n_u");
    require_positive(theta, "theta");
    if (p.zeta == 0.0) {
        throw std::domain_error("wages_gmm: zeta = 0 unsupported");
    }
    double inner = (1.0 - p.share_lambda) * std::pow(n_u, p.zeta) +
                   p.share_lambda * std::pow(p.a_rel * n_s, p.zeta);
    double common = p.alpha * theta * std::pow(inner, (p.alpha - p.zeta) / p.zeta);
    double w_s = common * p.share_lambda * p.a_rel * std::pow(p.a_rel * n_s, p.zeta - 1.0);
    double w_u = common * (1.0 - p.share_lambda) * std::pow(n_u, p.zeta - 1.0);
    return {w_s, w_u};
}

double skill_premium(double n_s, double n_u, const ModelParamsClassic& p) {
    require_positive(n_s, "n_s");
    require_positive(n_u, "n_u");
    double e = (p.delta - 1.0) / p.delta;
    return std::pow(p.a_s / p.a_u, e) * std::pow(n_s / n_u, -1.0 / p.delta);
}

double skill_share(double n_s, double n_u, const ModelParamsGmm& p) {
    require_positive(n_s, "n_s");
    require_positive(n_u, "n_u");
    double skilled = p.share_lambda * std::pow(p.a_rel * n_s, p.zeta);
    double unskilled = (1.0 - p.share_lambda) * std::pow(n_u, p.zeta);
    return skilled / (unskilled + skilled);
}

double average_wage(double n_s, double n_u, const ModelParamsClassic& p) {
    auto [w_s, w_u] = wages_classic(n_s, n_u, p);
    return (n_u * w_u + n_s * w_s) / (n_u + n_s);
}

EquilibriumState equilibrium_classic(double l_demand, const ModelParamsClassic& p) {
    require_positive(l_demand, "l_demand");
    p.validate();
    if (p.delta == 1.0) {
        throw std::domain_error("equilibrium_classic: delta = 1 unsupported");
    }
    EquilibriumState eq;
    eq.l_demand = l_demand;
    double g = p.gamma_disutility;
    double base_s = std::pow(g, -p.delta) * std::pow(p.a_s, p.delta - 1.0) * l_demand;
    double base_u = std::pow(g, -p.delta) * std::pow(p.a_u, p.delta - 1.0) * l_demand;
    eq.n_s = std::pow(base_s, 1.0 / (1.0 + p.delta * p.rho_s));
    eq.n_u = std::pow(base_u, 1.0 / (1.0 + p.delta * p.rho_u));
    // Inverse labor supply at the equilibrium allocation; identical to
    // the marginal product A_j^{(d-1)/d} (L/n_j*)^{1/d} with L exogenous.
    eq.w_s = g * std::pow(eq.n_s, p.rho_s);
    eq.w_u = g * std::pow(eq.n_u, p.rho_u);
    return eq;
}

double composition_ratio(double l_demand, const ModelParamsClassic& p) {
    EquilibriumState eq = equilibrium_classic(l_demand, p);
    return eq.n_s / eq.n_u;
}

double demand_shock(double br, double fs, double shock_scale) {
    if (br < 0.0 || fs < 0.0) throw std::domain_error("demand_shock: counts must be nonnegative");
    if (fs > br) throw std::domain_error("demand_shock: fs exceeds br");
    require_positive(shock_scale, "shock_scale");
    return shock_scale * (br - fs);
}

double total_demand(const DemandParams& d, double br, double fs) {
    return d.l_bar_br + demand_shock(br, fs, d.shock_scale) + d.l_other;
}

double theta_level(const DemandParams& d, double br) {
    if (br < 0.0) throw std::domain_error("theta_level: br must be nonnegative");
    require_positive(d.l_bar_county, "l_bar_county");
    return d.l_bar_county + d.phi_fees * br;
}

double delta_theta(const DemandParams& d, double br_t, double br_tm1) {
    if (br_t < 0.0 || br_tm1 < 0.0) {
        throw std::domain_error("delta_theta: counts must be nonnegative");
    }
    require_positive(d.l_bar_county, "l_bar_county");
    return d.phi_fees * (br_t - br_tm1) / (d.l_bar_county + br_t);
}

std::pair<double, double> log_diff_demand(double dn_s, double dn_u, double dtheta,
                                          double pi_share, const ModelParamsGmm& p) {
    double dw_s = dtheta +
                  ((p.zeta - 1.0) + (p.alpha - p.zeta) * pi_share) * dn_s +
                  (p.alpha - p.zeta) * (1.0 - pi_share) * dn_u;
    double dw_u = dtheta +
                  ((p.zeta - 1.0) + (p.alpha - p.zeta) * (1.0 - pi_share)) * dn_u +
                  (p.alpha - p.zeta) * pi_share * dn_s;
    return {dw_s, dw_u};
}

std::pair<double, double> log_diff_supply(double dw_s, double dw_u, const ModelParamsGmm& p) {
    return {dw_s / p.rho_s, dw_u / p.rho_u};
}

Calibration calibrate_gmm(double mu_skill_share, double wage_premium, double subst_elasticity) {
    if (!(mu_skill_share > 0.0 && mu_skill_share < 1.0)) {
        throw std::domain_error("calibrate_gmm: mu must lie in (0,1)");
    }
    require_positive(wage_premium, "wage_premium");
    require_positive(subst_elasticity, "subst_elasticity");
    Calibration c;
    c.zeta = 1.0 - 1.0 / subst_elasticity;
    double e = c.zeta - 1.0;
    double unskilled = std::pow(1.0 - mu_skill_share, e);
    double skilled = std::pow(wage_premium * mu_skill_share, e);
    c.share_lambda = unskilled / (skilled + unskilled);

    ModelParamsGmm p;
    p.zeta = c.zeta;
    p.share_lambda = c.share_lambda;
    p.a_rel = wage_premium;
    c.pi_share = skill_share(mu_skill_share, 1.0 - mu_skill_share, p);
    return c;
}

} // namespace legalmkt
