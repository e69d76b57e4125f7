#pragma once

#include <functional>

namespace ansec::throughput {

// Codeword / secrecy / redundancy rates in bits per channel use.
// r_s is always max(0, r_b - r_e).
struct RateTriple {
    double r_b;
    double r_s;
    double r_e;
};

RateTriple make_rates(double r_b, double r_e);

// Joint outage constraints: connection outage <= sigma, secrecy outage <= epsilon.
struct OutageConstraints {
    double sigma;
    double epsilon;

    void validate() const;
};

// R = log2(1 + beta), beta > 0.
double rate_from_threshold(double beta);

// beta = 2^r - 1, r >= 0.
double threshold_from_rate(double r);

// Secrecy transmission capacity: (1 - sigma) * lambda_l * max(0, r_b - r_e).
double stc(double lambda_l, double sigma, const RateTriple& rates);

struct ScalarMax {
    double arg;
    double value;
};

// Maximize a scalar objective over (0,1). With unimodal set, pure
// golden-section search; otherwise a 512-point coarse scan picks the best
// cell and golden section refines inside it. Ties resolve to the lowest
// scanned argument. A non-finite objective value raises std::runtime_error.
ScalarMax maximize_scalar(const std::function<double(double)>& objective,
                          bool unimodal, double abs_tol);

// Same, with an explicit coarse-scan resolution (used by resolution
// invariance checks; scan_points is ignored when unimodal is set).
ScalarMax maximize_scalar_scan(const std::function<double(double)>& objective,
                               bool unimodal, double abs_tol, int scan_points);

} // namespace ansec::throughput
