#pragma once

#include <stdexcept>

namespace ansec {

// Network-level inputs shared by both transmission schemes.
// lambda_l: legitimate transmitter density, lambda_e: eavesdropper density
// (both nodes per unit area), r: intended link distance, alpha: path loss
// exponent (> 2), n: transmit antennas per node (>= 2), p_total: total
// transmit power. Antenna gain never appears: it cancels out of every SIR.
struct NetworkParams {
    double lambda_l = 0.01;
    double lambda_e = 0.001;
    double r = 1.0;
    double alpha = 4.0;
    int n = 4;
    double p_total = 1.0;

    void validate() const {
        if (!(lambda_l > 0.0))
            throw std::domain_error("lambda_l must be positive");
        if (!(lambda_e >= 0.0))
            throw std::domain_error("lambda_e must be nonnegative");
        if (!(r > 0.0))
            throw std::domain_error("r must be positive");
        if (!(alpha > 2.0))
            throw std::domain_error("alpha must exceed 2");
        if (n < 2)
            throw std::domain_error("n must be at least 2");
        if (!(p_total > 0.0))
            throw std::domain_error("p_total must be positive");
    }
};

// Split of the total power between information signal (p_i = phi * P) and
// artificial noise (p_a = (1 - phi) * P). phi in (0, 1]; phi = 1 is the
// explicit no-noise limit, phi = 0 is excluded (connection outage would be 1
// identically; callers wanting that limit can pass phi = 1e-12).
struct PowerSplit {
    double phi;
    double p_i;
    double p_a;

    PowerSplit(double phi_, double p_total) {
        if (!(phi_ > 0.0) || phi_ > 1.0)
            throw std::domain_error("phi must lie in (0,1]");
        phi = phi_;
        p_i = p_total * phi_;
        p_a = p_total - p_i;
    }
};

// Linear SIR thresholds for the two outage events.
struct SirThresholds {
    double beta_b;
    double beta_e;

    void validate() const {
        if (!(beta_b > 0.0))
            throw std::domain_error("beta_b must be positive");
        if (!(beta_e > 0.0))
            throw std::domain_error("beta_e must be positive");
    }
};

inline void check_probability(double v, const char* name) {
    if (!(v > 0.0) || !(v < 1.0))
        throw std::domain_error(std::string(name) + " must lie in (0,1)");
}

} // namespace ansec
