#include "ansec/sectoring.hpp"

#include <cmath>
#include <cstdio>
#include <mutex>
#include <string>

#include "ansec/errors.hpp"
#include "ansec/specfun.hpp"
#include "ansec/throughput.hpp"

namespace ansec::sectoring {

namespace {

// (N-1)^{1-2/a} (phi^{-1}-1)^{2/a}; exactly 0 at phi = 1.
double noise_factor(const NetworkParams& p, double phi) {
    if (phi == 1.0)
        return 0.0;
    double c = 2.0 / p.alpha;
    return std::pow(static_cast<double>(p.n - 1), 1.0 - c) *
           std::pow(1.0 / phi - 1.0, c);
}

std::string g_selfcheck_note;
std::once_flag g_selfcheck_flag;

double closed_form_phi(const NetworkParams& params, double sigma, double epsilon);

void run_selfcheck() {
    // Reference grid: lambda_l=0.01, lambda_e=0.001, r=1, sigma=0.1,
    // epsilon=0.01, n in {4,8,16}. Closed form and golden section must
    // agree to 1e-4; otherwise record the discrepancy and advise the
    // numeric optimizer.
    NetworkParams p;
    p.lambda_l = 0.01;
    p.lambda_e = 0.001;
    p.r = 1.0;
    p.alpha = 4.0;
    for (int n : {4, 8, 16}) {
        p.n = n;
        double closed = closed_form_phi(p, 0.1, 0.01);
        double numeric = optimal_phi_numeric(p, 0.1, 0.01).phi;
        double d = std::fabs(closed - numeric);
        if (d > 1e-4) {
            g_selfcheck_note +=
                "closed-form phi disagrees with numeric optimizer at n=" +
                std::to_string(n) + " by " + std::to_string(d) +
                "; prefer optimal_phi_numeric. ";
        }
    }
    if (!g_selfcheck_note.empty())
        std::fputs(("ansec: " + g_selfcheck_note + "\n").c_str(), stderr);
}

double closed_form_phi(const NetworkParams& params, double sigma, double epsilon) {
    Alpha4Intermediates t = alpha4_intermediates(params, sigma, epsilon);
    double rho = t.varrho, vs = t.varsigma, kap = t.kappa;
    if (!(rho > vs))
        throw infeasible_error(
            "no positive secrecy capacity: varrho <= varsigma");
    double num = std::pow(vs, 2.0 / 3.0) *
                 std::pow(std::pow(2.0, 2.0 / 3.0) * std::pow(rho, 4.0 / 3.0) *
                                  std::pow(vs, 1.0 / 3.0) * std::pow(kap, 2.0 / 3.0) +
                              std::pow(2.0, 4.0 / 3.0) * rho * rho * vs +
                              2.0 * std::pow(rho, 2.0 / 3.0) *
                                  std::pow(vs, 5.0 / 3.0) * std::cbrt(kap),
                          2.0);
    double den = 4.0 * (params.n - 1) * std::pow(rho, 4.0 / 3.0) *
                 std::pow(kap, 2.0 / 3.0) * std::pow(rho * rho - vs * vs, 2.0);
    return 1.0 / (1.0 + num / den);
}

} // namespace

double connection_outage(const NetworkParams& params, const PowerSplit& split,
                         double beta_b) {
    params.validate();
    if (!(beta_b > 0.0))
        throw std::domain_error("beta_b must be positive");
    double c = 2.0 / params.alpha;
    double scale = std::pow(beta_b, c) * params.lambda_l *
                   specfun::c_alpha_n(params.alpha, 2) * params.r * params.r /
                   params.n;
    return 1.0 - std::exp(-scale * (1.0 + noise_factor(params, split.phi)));
}

double secrecy_outage_ub(const NetworkParams& params, const PowerSplit& split,
                         double beta_e) {
    params.validate();
    if (!(beta_e > 0.0))
        throw std::domain_error("beta_e must be positive");
    if (params.lambda_e == 0.0)
        return 0.0;
    if (split.phi == 1.0)
        return 1.0; // no artificial noise: every eavesdropper sees infinite SIR
    double c = 2.0 / params.alpha;
    double x = noise_factor(params, split.phi);
    double arg = (M_PI / specfun::c_alpha_n(params.alpha, 2)) *
                 (params.lambda_e / params.lambda_l) /
                 (std::pow(beta_e, c) * x);
    return 1.0 - std::exp(-arg);
}

double secrecy_outage_lb(const NetworkParams& params, const PowerSplit& split,
                         double beta_e) {
    params.validate();
    if (!(beta_e > 0.0))
        throw std::domain_error("beta_e must be positive");
    if (params.lambda_e == 0.0)
        return 0.0;
    if (split.phi == 1.0)
        return 1.0;
    double c = 2.0 / params.alpha;
    double x = noise_factor(params, split.phi);
    double pe = M_PI * params.lambda_e;
    return pe / (pe + params.lambda_l * specfun::c_alpha_n(params.alpha, 2) *
                          std::pow(beta_e, c) * x);
}

double beta_b_from_sigma(const NetworkParams& params, const PowerSplit& split,
                         double sigma) {
    params.validate();
    check_probability(sigma, "sigma");
    double base = params.n * std::log(1.0 / (1.0 - sigma)) /
                  (params.lambda_l * specfun::c_alpha_n(params.alpha, 2) *
                   params.r * params.r * (1.0 + noise_factor(params, split.phi)));
    return std::pow(base, params.alpha / 2.0);
}

double beta_e_from_epsilon(const NetworkParams& params, const PowerSplit& split,
                           double epsilon) {
    params.validate();
    check_probability(epsilon, "epsilon");
    if (!(params.lambda_e > 0.0))
        throw std::domain_error("lambda_e must be positive to invert the secrecy constraint");
    if (split.phi == 1.0)
        throw infeasible_error(
            "epsilon unreachable: phi = 1 leaves no artificial noise");
    double x = noise_factor(params, split.phi);
    double base = (M_PI / specfun::c_alpha_n(params.alpha, 2)) *
                  (params.lambda_e / params.lambda_l) /
                  (std::log(1.0 / (1.0 - epsilon)) * x);
    return std::pow(base, params.alpha / 2.0);
}

double capacity_lb(const NetworkParams& params, const PowerSplit& split,
                   double sigma, double epsilon) {
    params.validate();
    check_probability(sigma, "sigma");
    check_probability(epsilon, "epsilon");
    if (split.phi == 1.0 && params.lambda_e > 0.0)
        return 0.0; // secrecy constraint unreachable without artificial noise
    double rb = throughput::rate_from_threshold(
        beta_b_from_sigma(params, split, sigma));
    double re = 0.0;
    if (params.lambda_e > 0.0)
        re = throughput::rate_from_threshold(
            beta_e_from_epsilon(params, split, epsilon));
    return throughput::stc(params.lambda_l, sigma, throughput::make_rates(rb, re));
}

Alpha4Intermediates alpha4_intermediates(const NetworkParams& params,
                                         double sigma, double epsilon) {
    params.validate();
    check_probability(sigma, "sigma");
    check_probability(epsilon, "epsilon");
    double c2 = specfun::c_alpha_n(params.alpha, 2);
    double rho = params.n / (params.lambda_l * c2 * params.r * params.r) *
                 std::log(1.0 / (1.0 - sigma));
    double vs = (1.0 / std::log(1.0 / (1.0 - epsilon))) * (M_PI / c2) *
                (params.lambda_e / params.lambda_l);
    double d2 = rho * rho - vs * vs;
    double kap = rho * rho + vs * vs +
                 (d2 + std::sqrt(((rho - vs) * (rho - vs) + 1.0) *
                                 ((rho + vs) * (rho + vs) + 1.0))) *
                     d2;
    return {rho, vs, kap};
}

PowerSplit optimal_phi_alpha4(const NetworkParams& params, double sigma,
                              double epsilon) {
    params.validate();
    if (params.alpha != 4.0)
        throw std::domain_error("alpha must equal 4 exactly for the closed-form optimum");
    std::call_once(g_selfcheck_flag, run_selfcheck);
    return PowerSplit(closed_form_phi(params, sigma, epsilon), params.p_total);
}

PowerSplit optimal_phi_numeric(const NetworkParams& params, double sigma,
                               double epsilon) {
    params.validate();
    check_probability(sigma, "sigma");
    check_probability(epsilon, "epsilon");
    auto objective = [&](double phi) {
        return capacity_lb(params, PowerSplit(phi, params.p_total), sigma, epsilon);
    };
    throughput::ScalarMax best =
        throughput::maximize_scalar(objective, /*unimodal=*/true, 1e-8);
    if (!(best.value > 0.0))
        throw infeasible_error("no positive secrecy capacity");
    return PowerSplit(best.arg, params.p_total);
}

const char* alpha4_selfcheck_note() {
    return g_selfcheck_note.c_str();
}

} // namespace ansec::sectoring
