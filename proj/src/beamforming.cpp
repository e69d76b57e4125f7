#include "ansec/beamforming.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ansec/errors.hpp"
#include "ansec/specfun.hpp"
#include "ansec/throughput.hpp"

namespace ansec::beamforming {

namespace {

// Gamma(n + c) / Gamma(n) for integer n >= 1, 0 < c < 1.
double gamma_ratio(int n, double c) {
    if (n + c <= 170.0)
        return specfun::gamma_fn(n + c) / specfun::gamma_fn(n);
    return std::exp(specfun::log_gamma(n + c) - specfun::log_gamma(n));
}

// log of P(n, x) = 1 - e^{-x} sum_{k<n} x^k/k! for x >= 0, stable for both
// tiny and large x.
double log_p_int(int n, double x) {
    if (x == 0.0)
        return -std::numeric_limits<double>::infinity();
    if (x < static_cast<double>(n)) {
        // P = e^{-x} x^n / n! * sum_{j>=0} x^j / ((n+1)...(n+j)), all terms
        // positive, ratio < 1 throughout.
        double t = 1.0, s = 1.0;
        for (int j = 1; j < 10000; ++j) {
            t *= x / (n + j);
            s += t;
            if (t < 1e-17 * s)
                break;
        }
        return -x + n * std::log(x) - specfun::log_gamma(n + 1.0) + std::log(s);
    }
    // Complement: q = e^{-x} T_{n-1}(x) <= 1, every term <= 1.
    double t = std::exp(-x);
    double q = t;
    for (int k = 1; k < n; ++k) {
        t *= x / k;
        q += t;
    }
    return std::log1p(-q);
}

// R_m(x) = e^x - sum_{k<=m} x^k/k! for x < 0, in extended precision.
// Sign is (-1)^{m+1}; never zero for x < 0.
long double remainder_tail(int m, long double x) {
    if (-x <= 0.5L * (m + 2)) {
        // Ascending series from k = m+1; term ratio stays <= 1/2.
        long double t = 1.0L;
        for (int i = 1; i <= m + 1; ++i)
            t *= x / i;
        long double s = 0.0L;
        int k = m + 1;
        for (int it = 0; it < 600; ++it) {
            s += t;
            ++k;
            t *= x / k;
            if (fabsl(t) < 1e-22L * fabsl(s))
                break;
        }
        return s;
    }
    long double big = 1.0L, t = 1.0L;
    for (int k = 1; k <= m; ++k) {
        t *= x / k;
        big += t;
    }
    return expl(x) - big;
}

} // namespace

InterferencePdfSpec::InterferencePdfSpec(double phi_, double p_total_, int n_) {
    if (!(phi_ > 0.0) || phi_ > 1.0)
        throw std::domain_error("phi must lie in (0,1]");
    if (!(p_total_ > 0.0))
        throw std::domain_error("p_total must be positive");
    if (n_ < 2)
        throw std::domain_error("n must be at least 2");
    phi = phi_;
    p_total = p_total_;
    n = n_;
}

bool InterferencePdfSpec::equal_split() const {
    return std::fabs(phi - 1.0 / n) < 1e-6;
}

double InterferencePdfSpec::p_i() const { return phi * p_total; }

double InterferencePdfSpec::p_a() const { return p_total - p_i(); }

double interference_pdf(const InterferencePdfSpec& spec, double z) {
    if (!(z > 0.0) || !std::isfinite(z))
        throw std::domain_error("z must be positive and finite");
    double th1 = spec.p_i();
    if (spec.phi == 1.0)
        return std::exp(-z / th1) / th1;
    if (spec.equal_split()) {
        // Gamma(n, th1) density.
        return std::exp((spec.n - 1) * std::log(z) - z / th1 -
                        specfun::log_gamma(static_cast<double>(spec.n)) -
                        spec.n * std::log(th1));
    }
    double th2 = spec.p_a() / (spec.n - 1);
    double mu = 1.0 / th2 - 1.0 / th1;
    double base = 1.0 - th2 / th1; // = mu * th2
    double x = mu * z;
    if (x >= 0.0) {
        double lf = -std::log(th1) + (1.0 - spec.n) * std::log(base) -
                    z / th1 + log_p_int(spec.n - 1, x);
        return std::exp(lf);
    }
    // phi < 1/n: the bracket equals e^{-x} R_{n-2}(x), and the e^{-x} folds
    // with e^{-z/th1} into e^{-z/th2}. base^{1-n} and R carry the same sign
    // (-1)^{n-1}, so the density is their positive product.
    long double tail = remainder_tail(spec.n - 2, static_cast<long double>(x));
    if (tail == 0.0L)
        return 0.0;
    double lf = -std::log(th1) + (1.0 - spec.n) * std::log(-base) - z / th2 +
                static_cast<double>(logl(fabsl(tail)));
    return std::exp(lf);
}

double fractional_moment(const InterferencePdfSpec& spec, double alpha) {
    if (!(alpha > 2.0))
        throw std::domain_error("alpha must exceed 2");
    double c = 2.0 / alpha;
    int n = spec.n;
    double th1 = spec.p_i();
    if (spec.equal_split())
        return std::pow(th1, c) * gamma_ratio(n, c);
    double th2 = spec.p_a() / (n - 1);
    double base = 1.0 - th2 / th1;
    if (base > 0.0 && (n - 1) * std::log(1.0 / base) <= 9.2) {
        // Literal finite form; the prefactor is at most e^{9.2} here so the
        // cancellation against the sum costs only a few digits.
        double t = specfun::gamma_fn(1.0 + c), sum = 0.0;
        for (int k = 0; k <= n - 2; ++k) {
            sum += t;
            t *= base * (k + 1 + c) / (k + 1);
        }
        return std::pow(base, 1.0 - n) *
               (std::pow(th1, c) * specfun::gamma_fn(1.0 + c) -
                std::pow(th2, 1.0 + c) / th1 * sum);
    }
    if (base <= -1.0) {
        // Same finite sum, prefactor folded into each term so magnitudes
        // shrink toward k = 0: u_k = base^{1-n+k} Gamma(1+c+k)/k!.
        double lnu = -std::log(-base) + specfun::log_gamma(n - 1 + c) -
                     specfun::log_gamma(static_cast<double>(n - 1));
        double u = -std::exp(lnu); // sign of 1/base
        double sum = 0.0;
        for (int k = n - 2; k >= 0; --k) {
            sum += u;
            if (k > 0)
                u *= k / ((k + c) * base);
        }
        double piece1 = 0.0;
        double lp = (1.0 - n) * std::log(-base);
        if (lp >= -700.0)
            piece1 = (n % 2 == 0 ? -1.0 : 1.0) * std::exp(lp) *
                     std::pow(th1, c) * specfun::gamma_fn(1.0 + c);
        return piece1 - std::pow(th2, 1.0 + c) / th1 * sum;
    }
    int cap = 100 * n + 1000;
    if (base > 0.0) {
        // 2F1(n-1, -c; n; base) resummation of the literal form.
        double s = 1.0, term = 1.0;
        for (int k = 0; k < cap; ++k) {
            term *= (n - 1.0 + k) * (k - c) / ((n + k) * (k + 1.0)) * base;
            s += term;
            if (std::fabs(term) < 1e-17 * std::fabs(s))
                break;
        }
        return std::pow(th1, c) * gamma_ratio(n, c) * s;
    }
    // base in (-1, 0): Pfaff-transformed series in w = base/(base-1) < 1/2.
    double w = base / (base - 1.0);
    double s = 1.0, term = 1.0;
    for (int k = 0; k < cap; ++k) {
        term *= (k - c) / (n + k) * w;
        s += term;
        if (std::fabs(term) < 1e-17 * std::fabs(s))
            break;
    }
    return std::pow(th2, c) * gamma_ratio(n, c) * s;
}

double psi(const NetworkParams& params, const PowerSplit& split) {
    params.validate();
    double c = 2.0 / params.alpha;
    InterferencePdfSpec spec(split.phi, params.p_total, params.n);
    return M_PI * params.lambda_l * params.r * params.r *
           specfun::gamma_fn(1.0 - c) * fractional_moment(spec, params.alpha) /
           std::pow(split.p_i, c);
}

double pco_exact_core(double a, double alpha, int n_antennas) {
    if (!(a >= 0.0) || !std::isfinite(a))
        throw std::domain_error("a must be nonnegative and finite");
    if (!(alpha > 2.0))
        throw std::domain_error("alpha must exceed 2");
    if (n_antennas < 1)
        throw std::domain_error("n must be at least 1");
    if (n_antennas == 1)
        return -std::expm1(-a);
    double c = 2.0 / alpha;
    double inner = 0.0;
    double fact = 1.0;
    for (int p = 1; p <= n_antennas - 1; ++p) {
        fact *= p;
        double ks = 0.0, pw = 1.0;
        for (int k = 1; k <= p; ++k) {
            pw *= c * a;
            ks += pw * specfun::zeta(p, k, alpha);
        }
        inner += ks / fact;
    }
    double v = 1.0 - std::exp(-a) * (1.0 + inner);
    return v < 0.0 ? 0.0 : v;
}

double connection_outage_exact(const NetworkParams& params,
                               const PowerSplit& split, double beta_b) {
    params.validate();
    if (!(beta_b > 0.0))
        throw std::domain_error("beta_b must be positive");
    if (params.n > 16)
        throw capability_error(
            "exact connection outage enumerates 2^(n-1) subsets and is "
            "limited to n <= 16; use connection_outage_approx");
    double a = std::pow(beta_b, 2.0 / params.alpha) * psi(params, split);
    return pco_exact_core(a, params.alpha, params.n);
}

double connection_outage_approx(const NetworkParams& params,
                                const PowerSplit& split, double beta_b) {
    params.validate();
    if (!(beta_b > 0.0))
        throw std::domain_error("beta_b must be positive");
    return std::pow(beta_b, 2.0 / params.alpha) * psi(params, split) *
           specfun::k_alpha_n(params.alpha, params.n);
}

double secrecy_outage_lead(const NetworkParams& params,
                           const PowerSplit& split, double beta_e) {
    params.validate();
    if (!(beta_e > 0.0))
        throw std::domain_error("beta_e must be positive");
    if (params.lambda_e == 0.0)
        return 0.0;
    if (split.phi == 1.0)
        return std::numeric_limits<double>::infinity();
    double b = beta_e * (1.0 / split.phi - 1.0) / (params.n - 1);
    double c = 2.0 / params.alpha;
    return (params.lambda_e / params.lambda_l) * M_PI *
           std::pow(1.0 + b, 1.0 - params.n) /
           (specfun::c_alpha_n(params.alpha, params.n) * std::pow(b, c));
}

double secrecy_outage_ub(const NetworkParams& params, const PowerSplit& split,
                         double beta_e) {
    params.validate();
    if (!(beta_e > 0.0))
        throw std::domain_error("beta_e must be positive");
    if (params.lambda_e == 0.0)
        return 0.0;
    if (split.phi == 1.0)
        return 1.0;
    return -std::expm1(-secrecy_outage_lead(params, split, beta_e));
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
    double b = beta_e * (1.0 / split.phi - 1.0) / (params.n - 1);
    double c = 2.0 / params.alpha;
    double pe = M_PI * params.lambda_e;
    return std::pow(1.0 + b, 1.0 - params.n) * pe /
           (pe + params.lambda_l * specfun::c_alpha_n(params.alpha, params.n) *
                     std::pow(b, c));
}

double rb_approx(const NetworkParams& params, const PowerSplit& split,
                 double sigma) {
    params.validate();
    check_probability(sigma, "sigma");
    double denom = psi(params, split) * specfun::k_alpha_n(params.alpha, params.n);
    return throughput::rate_from_threshold(
        std::pow(sigma / denom, params.alpha / 2.0));
}

double re_from_epsilon(const NetworkParams& params, const PowerSplit& split,
                       double epsilon) {
    params.validate();
    check_probability(epsilon, "epsilon");
    if (params.lambda_e == 0.0)
        return 0.0;
    if (split.phi == 1.0)
        throw infeasible_error(
            "epsilon unreachable: phi = 1 leaves no artificial noise");
    auto lead = [&](double be) {
        return secrecy_outage_lead(params, split, be);
    };
    double lo = 1e-9, hi = 1e9;
    if (lead(lo) < epsilon)
        return 0.0; // slack even as beta_e -> 0
    if (lead(hi) > epsilon)
        throw infeasible_error(
            "epsilon unreachable within the beta_e search bracket");
    for (int it = 0; it < 80; ++it) {
        double mid = std::sqrt(lo * hi);
        if (lead(mid) > epsilon)
            lo = mid;
        else
            hi = mid;
    }
    return throughput::rate_from_threshold(std::sqrt(lo * hi));
}

double re_alpha4_n2(const NetworkParams& params, const PowerSplit& split,
                    double epsilon) {
    params.validate();
    check_probability(epsilon, "epsilon");
    if (params.alpha != 4.0 || params.n != 2)
        throw std::domain_error(
            "closed-form redundancy rate needs alpha = 4 and n = 2");
    if (params.lambda_e == 0.0)
        return 0.0;
    if (split.phi == 1.0)
        throw infeasible_error(
            "epsilon unreachable: phi = 1 leaves no artificial noise");
    double c2 = specfun::c_alpha_n(4.0, 2);
    double q = M_PI * params.lambda_e / (epsilon * params.lambda_l * c2);
    double a = 108.0 * q + 12.0 * std::sqrt(81.0 * q * q + 12.0);
    double a3 = std::cbrt(a);
    double y = (a3 * a3 - 12.0) / (6.0 * a3);
    return std::log2(1.0 + split.phi / (1.0 - split.phi) * y * y);
}

double capacity_approx(const NetworkParams& params, const PowerSplit& split,
                       double sigma, double epsilon) {
    params.validate();
    check_probability(sigma, "sigma");
    check_probability(epsilon, "epsilon");
    double rb = rb_approx(params, split, sigma);
    double re;
    try {
        re = re_from_epsilon(params, split, epsilon);
    } catch (const infeasible_error&) {
        return 0.0;
    }
    return throughput::stc(params.lambda_l, sigma,
                           throughput::make_rates(rb, re));
}

PowerSplit optimal_phi_numeric(const NetworkParams& params, double sigma,
                               double epsilon) {
    return optimal_phi_numeric_scan(params, sigma, epsilon, 512);
}

PowerSplit optimal_phi_numeric_scan(const NetworkParams& params, double sigma,
                                    double epsilon, int scan_points) {
    params.validate();
    check_probability(sigma, "sigma");
    check_probability(epsilon, "epsilon");
    auto objective = [&](double phi) {
        return capacity_approx(params, PowerSplit(phi, params.p_total), sigma,
                               epsilon);
    };
    throughput::ScalarMax best = throughput::maximize_scalar_scan(
        objective, /*unimodal=*/false, 1e-8, scan_points);
    if (!(best.value > 0.0))
        throw infeasible_error("no positive secrecy capacity");
    return PowerSplit(best.arg, params.p_total);
}

} // namespace ansec::beamforming
