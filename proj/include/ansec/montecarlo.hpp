#pragma once

#include <cstdint>
#include <vector>

#include "ansec/beamforming.hpp"
#include "ansec/rng.hpp"
#include "ansec/types.hpp"

namespace ansec::montecarlo {

// Finite disc standing in for the plane. radius = 0 asks the simulator to
// derive the default from the parameters and truncation tolerance.
struct SimWindow {
    double radius = 0.0;
};

// Smallest radius with truncation bias below delta_trunc of the mean
// interference seen from the window, floored at 50 r:
// max(50 r, r ((1 + delta) / delta)^{1/(alpha-2)}).
double default_window_radius(const NetworkParams& params, double delta_trunc);

struct McConfig {
    long trials = 100000;
    std::uint64_t seed = 1;
    SimWindow window;
    double delta_trunc = 1e-3;
    int threads = 1; // never changes results, only wall time
};

struct McEstimate {
    double p_hat = 0.0;
    double std_err = 0.0; // sqrt(p_hat (1 - p_hat) / trials)
    double ci_lo = 0.0;   // Wilson 95%
    double ci_hi = 0.0;
    long trials = 0;
    std::uint64_t seed = 0;
};

struct Point {
    double x;
    double y;
};

// Homogeneous PPP on the disc of the given radius: Poisson count, uniform
// positions.
std::vector<Point> sample_ppp(double density, const SimWindow& window, Rng& rng);

// One draw of the power an interferer deposits at an unintended receiver,
// by explicit channel construction: unit-variance complex entries, the
// component along the interferer's own beam carries p_i, the n-1 orthogonal
// noise directions share p_a. Distributionally identical to
// beamforming::interference_pdf.
double sample_interference_power(const beamforming::InterferencePdfSpec& spec,
                                 Rng& rng);

// Connection outage of the sectoring scheme: typical receiver at the
// origin, interferers thinned into information emitters (probability 1/n,
// power p_i) and noise emitters (power p_a/(n-1) toward the receiver).
McEstimate sim_sectoring_pco(const NetworkParams& params,
                             const PowerSplit& split, double beta_b,
                             const McConfig& cfg);

// Secrecy outage of the sectoring scheme: typical transmitter at the
// origin, eavesdroppers in its information sector realized as a thinned
// PPP of density lambda_e/n, jamming interferers of density (n-1)/n
// lambda_l; outage when any eavesdropper's SIR exceeds beta_e.
McEstimate sim_sectoring_pso(const NetworkParams& params,
                             const PowerSplit& split, double beta_e,
                             const McConfig& cfg);

// Connection outage of the beamforming scheme: own-link gain Gamma(n,1),
// interferer powers by channel construction (sample_interference_power).
McEstimate sim_beamforming_pco(const NetworkParams& params,
                               const PowerSplit& split, double beta_b,
                               const McConfig& cfg);

// Secrecy outage of the beamforming scheme: eavesdropper PPP of density
// lambda_e; each eavesdropper hears the message over an Exp(1) gain and is
// jammed by the typical transmitter's own artificial noise (Gamma(n-1,1)
// gain at distance |z|) plus every interferer's noise (Gamma(n-1,1) gains);
// outage when any SIR exceeds beta_e.
McEstimate sim_beamforming_pso(const NetworkParams& params,
                               const PowerSplit& split, double beta_e,
                               const McConfig& cfg);

// Upper bound on the expected number of eavesdroppers outside the window
// whose SIR could still exceed beta_e (signal decays as z^{-alpha} while a
// nearest jammer keeps the noise floor up); these are the events the
// finite-window secrecy simulations ignore.
double ignored_tail_bound(const NetworkParams& params, const PowerSplit& split,
                          double beta_e, double radius, bool is_beamforming);

} // namespace ansec::montecarlo
