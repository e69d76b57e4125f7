#pragma once

#include "ansec/types.hpp"

namespace ansec::sectoring {

// Connection outage probability of the sectoring scheme:
// 1 - exp(-(beta_b^{2/a} lambda_l C_{a,2} r^2 / N)(1 + (N-1)^{1-2/a}(phi^{-1}-1)^{2/a})).
// At phi = 1 the artificial-noise addend is exactly zero.
double connection_outage(const NetworkParams& params, const PowerSplit& split,
                         double beta_b);

// Secrecy outage upper bound:
// 1 - exp(-(pi/C_{a,2})(lambda_e/lambda_l) / (beta_e^{2/a}(N-1)^{1-2/a}(phi^{-1}-1)^{2/a})).
// phi = 1 returns 1 when lambda_e > 0 (no artificial noise), 0 when lambda_e = 0.
double secrecy_outage_ub(const NetworkParams& params, const PowerSplit& split,
                         double beta_e);

// Secrecy outage lower bound (nearest eavesdropper):
// pi lambda_e / (pi lambda_e + lambda_l C_{a,2} beta_e^{2/a}(N-1)^{1-2/a}(phi^{-1}-1)^{2/a}).
double secrecy_outage_lb(const NetworkParams& params, const PowerSplit& split,
                         double beta_e);

// Unique beta_b with connection_outage(...) = sigma (algebraic inversion).
double beta_b_from_sigma(const NetworkParams& params, const PowerSplit& split,
                         double sigma);

// Unique beta_e with secrecy_outage_ub(...) = epsilon (algebraic inversion).
// Requires phi < 1 and lambda_e > 0; phi = 1 raises infeasible_error.
double beta_e_from_epsilon(const NetworkParams& params, const PowerSplit& split,
                           double epsilon);

// Secrecy transmission capacity lower bound at the given split:
// (1-sigma) lambda_l [log2((1+beta_b)/(1+beta_e))]^+, clamped at zero.
double capacity_lb(const NetworkParams& params, const PowerSplit& split,
                   double sigma, double epsilon);

// Intermediates of the alpha = 4 closed-form optimum.
struct Alpha4Intermediates {
    double varrho;
    double varsigma;
    double kappa;
};

Alpha4Intermediates alpha4_intermediates(const NetworkParams& params,
                                         double sigma, double epsilon);

// Closed-form maximizer of capacity_lb for alpha = 4 exactly.
// Raises infeasible_error when varrho <= varsigma (no positive capacity).
PowerSplit optimal_phi_alpha4(const NetworkParams& params, double sigma,
                              double epsilon);

// Numeric maximizer of capacity_lb over phi in (0,1) by golden-section
// search (the objective is unimodal with at most a flat zero tail on the
// right). Raises infeasible_error when capacity is zero everywhere.
PowerSplit optimal_phi_numeric(const NetworkParams& params, double sigma,
                               double epsilon);

// One-time cross-check of the closed form against the numeric optimizer on
// a fixed reference grid, run on first use of optimal_phi_alpha4. Returns
// an empty string when they agree within 1e-4, else a description of the
// discrepancy (in that case trust optimal_phi_numeric).
const char* alpha4_selfcheck_note();

} // namespace ansec::sectoring
