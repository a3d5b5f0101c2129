#pragma once

#include <utility>

namespace legalmkt {

// Static parameterization of the legal-services economy: CES in levels
// with factor-augmenting technologies and a labor-disutility scale.
struct ModelParamsClassic {
    double gamma_disutility = 1.0; // labor-disutility scale
    double rho_s = 2.0;            // inverse Frisch elasticity, skilled
    double rho_u = 1.0;            // inverse Frisch elasticity, unskilled
    double delta = 2.0;            // elasticity of substitution (> 1)
    double a_s = 2.0;              // skilled factor-augmenting technology
    double a_u = 1.0;              // unskilled factor-augmenting technology
    double sigma_curv = 2.0;       // utility curvature (welfare only)
    double beta_disc = 0.95;       // discount factor (welfare only)

    void validate() const;
};

// Share-form parameterization used by the simultaneous-equations
// estimator: substitution exponent zeta = 1 - 1/delta, CES share
// share_lambda, relative skilled efficiency a_rel, returns to scale
// alpha. The disutility scale is fixed at 1 in this form.
struct ModelParamsGmm {
    double zeta = 1.0 - 1.0 / 1.4;
    double share_lambda = 0.5;
    double a_rel = 2.40;
    double alpha = 1.0;
    double rho_s = 2.0;
    double rho_u = 1.0;
    double sigma_curv = 2.0;
    double beta_disc = 0.95;

    void validate() const;
};

// Demand-side constants: steady-state demand level, per-bankruptcy fee
// increment, forum-shopping shock scale, and the split of legal
// services into bankruptcy and non-bankruptcy work.
struct DemandParams {
    double l_bar_county = 10.0; // steady-state county demand level
    double phi_fees = 1.0;      // per-bankruptcy legal-expense increment
    double shock_scale = 1.0;   // scaling of the bankruptcy shock
    double l_other = 0.0;       // non-bankruptcy legal services
    double l_bar_br = 1.0;      // steady-state bankruptcy services

    void validate() const;
};

struct EquilibriumState {
    double n_s = 0.0;
    double n_u = 0.0;
    double w_s = 0.0;
    double w_u = 0.0;
    double l_demand = 0.0;
};

// Household labor supply n = (w/gamma)^{1/rho}.
double labor_supply(double wage, double rho, double gamma_disutility);

// Frisch elasticity 1/rho.
double frisch_elasticity(double rho);

// CES output in levels: L = [(A_u u)^{(d-1)/d} + (A_s s)^{(d-1)/d}]^{d/(d-1)}.
// Homogeneous of degree one. delta = 1 is rejected.
double ces_output_classic(double n_s, double n_u, const ModelParamsClassic& p);

// Share-form CES: L = theta [(1-lambda) u^z + lambda (A s)^z]^{alpha/z}.
// Homogeneous of degree alpha in labor, linear in theta. zeta = 0 is rejected.
double ces_output_gmm(double n_s, double n_u, double theta, const ModelParamsGmm& p);

// Marginal-product wages for the level-form CES, evaluated at the CES
// output implied by (n_s, n_u). Returns (w_s, w_u).
std::pair<double, double> wages_classic(double n_s, double n_u, const ModelParamsClassic& p);

// Marginal-product wages for the share-form CES. Returns (w_s, w_u).
std::pair<double, double> wages_gmm(double n_s, double n_u, double theta, const ModelParamsGmm& p);

// Wage ratio w_s/w_u = (A_s/A_u)^{(d-1)/d} (s/u)^{-1/d}.
double skill_premium(double n_s, double n_u, const ModelParamsClassic& p);

// CES cost share of skilled labor: lambda (A s)^z / ((1-lambda) u^z + lambda (A s)^z).
double skill_share(double n_s, double n_u, const ModelParamsGmm& p);

// Employment-weighted average wage; equals the closed form in s/u.
double average_wage(double n_s, double n_u, const ModelParamsClassic& p);

// Closed-form market equilibrium for an exogenous demand level L:
//   n_j* = [gamma^{-d} A_j^{d-1} L]^{1/(1+d rho_j)},  w_j* = gamma n_j*^{rho_j}.
// The wage expression is the inverse labor supply evaluated at n_j*,
// which equals the marginal product A_j^{(d-1)/d}(L/n_j*)^{1/d} with L
// exogenous, so labor_supply(w_j*) = n_j* holds to rounding.
EquilibriumState equilibrium_classic(double l_demand, const ModelParamsClassic& p);

// s*/u* as a function of L; decreasing in L when rho_u < rho_s.
double composition_ratio(double l_demand, const ModelParamsClassic& p);

// Bankruptcy demand shock h = scale * (br - fs); requires fs <= br.
double demand_shock(double br, double fs, double shock_scale);

// L = L_bar_BR + h(BR, FS) + L_other.
double total_demand(const DemandParams& d, double br, double fs);

// County demand shifter theta = L_bar + Phi * BR and its log change
// Delta theta = Phi (BR_t - BR_{t-1}) / (L_bar + BR_t).
double theta_level(const DemandParams& d, double br);
double delta_theta(const DemandParams& d, double br_t, double br_tm1);

// Log-differenced labor demand: wage changes implied by employment
// changes and the demand shift. Returns (dw_s, dw_u).
std::pair<double, double> log_diff_demand(double dn_s, double dn_u, double dtheta,
                                          double pi_share, const ModelParamsGmm& p);

// Log-differenced labor supply: dn_j = dw_j / rho_j. Returns (dn_s, dn_u).
std::pair<double, double> log_diff_supply(double dw_s, double dw_u, const ModelParamsGmm& p);

struct Calibration {
    double zeta = 0.0;
    double share_lambda = 0.0;
    double pi_share = 0.0;
};

// Production-side calibration from the skilled employment share mu, the
// skilled/unskilled wage premium, and the substitution elasticity:
//   zeta   = 1 - 1/delta
//   lambda = (1-mu)^{z-1} / ((A mu)^{z-1} + (1-mu)^{z-1})
//   pi     = skill share evaluated at (n_s, n_u) = (mu, 1-mu).
Calibration calibrate_gmm(double mu_skill_share, double wage_premium, double subst_elasticity);

} // namespace legalmkt
