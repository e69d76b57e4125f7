#pragma once

namespace ansec::specfun {

// Gamma function for x > 0. Relative error <= 1e-12 on (0, 170].
// Throws std::domain_error for non-positive or non-finite x.
double gamma_fn(double x);

// log(Gamma(x)) for x > 0; usable where gamma_fn would overflow.
double log_gamma(double x);

// C_{alpha,n} = pi * Gamma(n - 1 + 2/alpha) * Gamma(1 - 2/alpha) / Gamma(n - 1).
// Requires alpha > 2 and n >= 2 (pole at n = 1).
double c_alpha_n(double alpha, int n);

// Sum over all subsets theta of {1,...,p-1} with |theta| = p - k, elements
// l_1 < ... < l_{p-k}, of the product over i of (l_i - (2/alpha)(l_i - i + 1)).
// The empty-subset product counts as 1, so zeta(p, p, alpha) = 1.
// Requires 1 <= k <= p. Cost is 2^(p-1) subsets.
double zeta(int p, int k, double alpha);

// K_{alpha,n} = 1 - (2/alpha) * sum_{p=1}^{n-1} (1/p!) prod_{l=1}^{p-1} (l - 2/alpha).
// Empty sum (n = 1) gives 1. Requires alpha > 2 and n >= 1.
double k_alpha_n(double alpha, int n);

// Regularized lower incomplete gamma function with integer shape:
// P(n, x) = 1 - e^{-x} * sum_{k=0}^{n-1} x^k / k!. Requires n >= 1, x >= 0.
double reg_lower_inc_gamma_int(int n, double x);

} // namespace ansec::specfun
