#pragma once

#include "ansec/types.hpp"

namespace ansec::beamforming {

// Distribution inputs for the aggregate power an interferer deposits at an
// unintended receiver: p_i on the beam-aligned component (unit-mean
// exponential) plus p_a spread evenly over the n-1 noise directions (sum of
// n-1 unit-mean exponentials). At phi = 1/n all n directions carry the same
// power and the total collapses to a Gamma(n) shape.
struct InterferencePdfSpec {
    double phi;
    double p_total;
    int n;

    InterferencePdfSpec(double phi_, double p_total_, int n_);

    bool equal_split() const; // |phi - 1/n| < 1e-6, the branch-switch window
    double p_i() const;
    double p_a() const;
};

// Density of the interference power described above at z > 0. Evaluated in
// log space; the alternating tail that appears for phi < 1/n is summed in
// extended precision so the result stays nonnegative.
double interference_pdf(const InterferencePdfSpec& spec, double z);

// E[Z^{2/alpha}] for Z distributed as above. Five evaluation branches keyed
// on base = 1 - p_a / ((n-1) p_i): near-equal split uses the Gamma moment,
// mild positive base uses the literal finite sum, base <= -1 sums the same
// terms backward with the prefactor folded in, and the remaining base
// ranges use hypergeometric series that avoid the cancellation the literal
// form suffers when base^(1-n) is large.
double fractional_moment(const InterferencePdfSpec& spec, double alpha);

// Interference intensity scale for the beamforming scheme:
// pi lambda_l r^2 Gamma(1 - 2/alpha) E[Z^{2/alpha}] / p_i^{2/alpha}.
double psi(const NetworkParams& params, const PowerSplit& split);

// Exact connection outage as a function of a = beta_b^{2/alpha} psi:
// 1 - e^{-a}(1 + sum_{p=1}^{n-1} (1/p!) sum_{k=1}^{p} ((2/alpha) a)^k zeta(p,k)).
// n_antennas = 1 degenerates to 1 - e^{-a}. Exposed for structural tests.
double pco_exact_core(double a, double alpha, int n_antennas);

// Exact connection outage probability. Needs 2^(n-1) subset enumerations per
// zeta value, so n > 16 raises capability_error naming connection_outage_approx.
double connection_outage_exact(const NetworkParams& params,
                               const PowerSplit& split, double beta_b);

// Small-outage connection approximation psi K_{alpha,n} beta_b^{2/alpha}.
// Deliberately unclamped: values above 1 flag that the regime assumption
// (outage well below 1) is violated.
double connection_outage_approx(const NetworkParams& params,
                                const PowerSplit& split, double beta_b);

// Mean number of eavesdroppers above threshold,
// (lambda_e/lambda_l) pi (1+b)^{1-n} / (C_{alpha,n} b^{2/alpha}) with
// b = beta_e (phi^{-1}-1)/(n-1). Returns +infinity at phi = 1 when
// lambda_e > 0, and 0 when lambda_e = 0.
double secrecy_outage_lead(const NetworkParams& params,
                           const PowerSplit& split, double beta_e);

// Secrecy outage upper bound 1 - exp(-lead).
double secrecy_outage_ub(const NetworkParams& params, const PowerSplit& split,
                         double beta_e);

// Secrecy outage lower bound
// (1+b)^{1-n} pi lambda_e / (pi lambda_e + lambda_l C_{alpha,n} b^{2/alpha}).
double secrecy_outage_lb(const NetworkParams& params, const PowerSplit& split,
                         double beta_e);

// Codeword rate meeting connection outage sigma under the small-outage
// approximation: log2(1 + (sigma / (psi K_{alpha,n}))^{alpha/2}).
double rb_approx(const NetworkParams& params, const PowerSplit& split,
                 double sigma);

// Smallest redundancy rate log2(1 + beta_e) with lead <= epsilon, from a
// geometric bisection of the lead over beta_e in [1e-9, 1e9]. Returns 0 when
// the constraint is slack everywhere (including lambda_e = 0); raises
// infeasible_error when even beta_e = 1e9 cannot meet it (and at phi = 1).
double re_from_epsilon(const NetworkParams& params, const PowerSplit& split,
                       double epsilon);

// Closed-form redundancy rate for alpha = 4, n = 2 (Cardano solution of the
// cubic the lead constraint reduces to). Other (alpha, n) raise
// std::domain_error; the bisection above covers them.
double re_alpha4_n2(const NetworkParams& params, const PowerSplit& split,
                    double epsilon);

// Approximate secrecy transmission capacity
// (1-sigma) lambda_l [rb_approx - re_from_epsilon]^+; an infeasible
// redundancy constraint yields capacity 0.
double capacity_approx(const NetworkParams& params, const PowerSplit& split,
                       double sigma, double epsilon);

// Maximizer of capacity_approx over phi in (0,1): coarse scan plus
// golden-section refinement. Raises infeasible_error when the capacity is
// zero for every phi.
PowerSplit optimal_phi_numeric(const NetworkParams& params, double sigma,
                               double epsilon);

// Same with an explicit scan resolution (default above is 512 points).
PowerSplit optimal_phi_numeric_scan(const NetworkParams& params, double sigma,
                                    double epsilon, int scan_points);

} // namespace ansec::beamforming
