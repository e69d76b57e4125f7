#include "ansec/throughput.hpp"

#include <cmath>
#include <stdexcept>

namespace ansec::throughput {

namespace {

constexpr double kLo = 1e-9;
constexpr double kHi = 1.0 - 1e-9;

double checked_eval(const std::function<double(double)>& f, double x) {
    double v = f(x);
    if (!std::isfinite(v))
        throw std::runtime_error("objective returned a non-finite value");
    return v;
}

// Golden-section maximization on [a,b]. On ties the left half is kept,
// which drives flat regions toward the lowest argument.
ScalarMax golden_section(const std::function<double(double)>& f,
                         double a, double b, double abs_tol) {
    const double invphi = 0.6180339887498949;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = checked_eval(f, c);
    double fd = checked_eval(f, d);
    while (b - a > abs_tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = checked_eval(f, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = checked_eval(f, d);
        }
    }
    double mid = 0.5 * (a + b);
    return {mid, checked_eval(f, mid)};
}

} // namespace

RateTriple make_rates(double r_b, double r_e) {
    if (!(r_b >= 0.0))
        throw std::domain_error("r_b must be nonnegative");
    if (!(r_e >= 0.0))
        throw std::domain_error("r_e must be nonnegative");
    return {r_b, std::max(0.0, r_b - r_e), r_e};
}

void OutageConstraints::validate() const {
    if (!(sigma > 0.0) || !(sigma < 1.0))
        throw std::domain_error("sigma must lie in (0,1)");
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw std::domain_error("epsilon must lie in (0,1)");
}

double rate_from_threshold(double beta) {
    if (!(beta > 0.0))
        throw std::domain_error("beta must be positive");
    return std::log2(1.0 + beta);
}

double threshold_from_rate(double r) {
    if (!(r >= 0.0))
        throw std::domain_error("r must be nonnegative");
    return std::exp2(r) - 1.0;
}

double stc(double lambda_l, double sigma, const RateTriple& rates) {
    if (!(lambda_l > 0.0))
        throw std::domain_error("lambda_l must be positive");
    if (!(sigma > 0.0) || !(sigma < 1.0))
        throw std::domain_error("sigma must lie in (0,1)");
    return (1.0 - sigma) * lambda_l * std::max(0.0, rates.r_b - rates.r_e);
}

ScalarMax maximize_scalar(const std::function<double(double)>& objective,
                          bool unimodal, double abs_tol) {
    return maximize_scalar_scan(objective, unimodal, abs_tol, 512);
}

ScalarMax maximize_scalar_scan(const std::function<double(double)>& objective,
                               bool unimodal, double abs_tol, int scan_points) {
    if (!(abs_tol > 0.0))
        throw std::domain_error("abs_tol must be positive");
    if (unimodal)
        return golden_section(objective, kLo, kHi, abs_tol);
    if (scan_points < 2)
        throw std::domain_error("scan_points must be at least 2");
    double h = (kHi - kLo) / scan_points;
    int best = 0;
    double best_val = -HUGE_VAL;
    for (int j = 0; j < scan_points; ++j) {
        double x = kLo + (j + 0.5) * h;
        double v = checked_eval(objective, x);
        if (v > best_val) { // strict: ties keep the lowest scanned argument
            best_val = v;
            best = j;
        }
    }
    double center = kLo + (best + 0.5) * h;
    ScalarMax refined = golden_section(objective,
                                       std::max(kLo, center - h),
                                       std::min(kHi, center + h), abs_tol);
    if (refined.value >= best_val)
        return refined;
    return {center, best_val};
}

} // namespace ansec::throughput
