#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ansec/beamforming.hpp"
#include "ansec/montecarlo.hpp"
#include "ansec/sectoring.hpp"
#include "ansec/specfun.hpp"
#include "ansec/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

using namespace ansec;

namespace {

NetworkParams base_params() {
    NetworkParams p;
    p.lambda_l = 0.01;
    p.lambda_e = 0.001;
    p.r = 1.0;
    p.alpha = 4.0;
    p.n = 4;
    p.p_total = 1.0;
    return p;
}

montecarlo::McConfig quick_cfg(long trials, std::uint64_t seed) {
    montecarlo::McConfig cfg;
    cfg.trials = trials;
    cfg.seed = seed;
    return cfg;
}

bool within_3se(const montecarlo::McEstimate& est, double ref) {
    double se_ref =
        std::sqrt(ref * (1.0 - ref) / static_cast<double>(est.trials));
    double slack = 3.0 * std::max(est.std_err, se_ref);
    return std::fabs(est.p_hat - ref) <= slack;
}

// Kolmogorov-Smirnov sup distance between sorted samples and a CDF.
double ks_distance(std::vector<double>& samples,
                   const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    double n = static_cast<double>(samples.size());
    double worst = 0.0;
    for (size_t i = 0; i < samples.size(); ++i) {
        double c = cdf(samples[i]);
        worst = std::max(worst, std::fabs(c - static_cast<double>(i) / n));
        worst = std::max(worst, std::fabs(c - static_cast<double>(i + 1) / n));
    }
    return worst;
}

} // namespace

TEST_CASE("point process sampling hits the target intensity") {
    montecarlo::Rng rng(42);
    montecarlo::SimWindow w{20.0};
    double density = 0.25;
    double expect = density * M_PI * w.radius * w.radius; // 314.16
    long total = 0;
    double sum_x = 0.0;
    int reps = 200;
    for (int i = 0; i < reps; ++i) {
        auto pts = montecarlo::sample_ppp(density, w, rng);
        total += static_cast<long>(pts.size());
        for (auto& pt : pts) {
            sum_x += pt.x;
            CHECK(pt.x * pt.x + pt.y * pt.y <= w.radius * w.radius + 1e-9);
        }
    }
    double mean = static_cast<double>(total) / reps;
    double se = std::sqrt(expect / reps); // Poisson variance = mean
    CHECK(std::fabs(mean - expect) < 3.0 * se);
    // x coordinates average to zero (isotropy)
    double sd_x = w.radius / 2.0;
    CHECK(std::fabs(sum_x / total) < 3.0 * sd_x / std::sqrt((double)total));
    // zero density gives an empty set
    auto none = montecarlo::sample_ppp(0.0, w, rng);
    CHECK(none.empty());
    CHECK_THROWS_AS(montecarlo::sample_ppp(-1.0, w, rng), std::domain_error);
    montecarlo::SimWindow bad{0.0};
    CHECK_THROWS_AS(montecarlo::sample_ppp(1.0, bad, rng), std::domain_error);
}

TEST_CASE("constructed interference power has the advertised mean") {
    beamforming::InterferencePdfSpec spec(0.3, 1.0, 4);
    montecarlo::Rng rng(7);
    long n = 100000;
    double sum = 0.0, sum2 = 0.0;
    for (long i = 0; i < n; ++i) {
        double v = montecarlo::sample_interference_power(spec, rng);
        CHECK(v >= 0.0);
        sum += v;
        sum2 += v * v;
    }
    double mean = sum / n;
    double var = sum2 / n - mean * mean;
    double se = std::sqrt(var / n);
    CHECK(std::fabs(mean - 1.0) < 3.0 * se);
    // analytic variance: p_i^2 + p_a^2/(n-1)
    double var_expect = 0.3 * 0.3 + 0.49 / 3.0;
    CHECK(var == doctest::Approx(var_expect).epsilon(0.05));
}

TEST_CASE("constructed interference power matches the Gamma law at the equal split") {
    beamforming::InterferencePdfSpec spec(0.25, 1.0, 4);
    montecarlo::Rng rng(11);
    std::vector<double> samples(100000);
    for (auto& v : samples)
        v = montecarlo::sample_interference_power(spec, rng);
    auto cdf = [](double z) {
        return specfun::reg_lower_inc_gamma_int(4, z / 0.25);
    };
    CHECK(ks_distance(samples, cdf) < 0.01);
}

TEST_CASE("constructed interference power matches the two-branch density") {
    // n = 2, info-heavy split: CDF by cumulative Simpson over the pdf.
    beamforming::InterferencePdfSpec spec(0.9, 1.0, 2);
    const int grid_n = 8193;
    const double z_max = 40.0;
    std::vector<double> grid(grid_n), cum(grid_n, 0.0);
    for (int i = 0; i < grid_n; ++i)
        grid[i] = z_max * i / (grid_n - 1);
    auto pdf = [&](double z) {
        return beamforming::interference_pdf(spec, z < 1e-12 ? 1e-12 : z);
    };
    double h = z_max / (grid_n - 1);
    for (int i = 2; i < grid_n; i += 2) {
        double add =
            (pdf(grid[i - 2]) + 4.0 * pdf(grid[i - 1]) + pdf(grid[i])) * h / 3.0;
        cum[i] = cum[i - 2] + add;
        cum[i - 1] = cum[i - 2] + 0.5 * add; // midpoint fill, plenty for KS
    }
    auto cdf = [&](double z) {
        if (z <= 0.0)
            return 0.0;
        if (z >= z_max)
            return 1.0;
        double pos = z / h;
        int i = static_cast<int>(pos);
        double frac = pos - i;
        return cum[i] + frac * (cum[i + 1] - cum[i]);
    };
    montecarlo::Rng rng(13);
    std::vector<double> samples(100000);
    for (auto& v : samples)
        v = montecarlo::sample_interference_power(spec, rng);
    CHECK(ks_distance(samples, cdf) < 0.01);
}

TEST_CASE("simulations reproduce bitwise under identical configuration") {
    auto p = base_params();
    PowerSplit split(0.5, 1.0);
    auto cfg = quick_cfg(2000, 99);
    auto a = montecarlo::sim_sectoring_pco(p, split, 10.0, cfg);
    auto b = montecarlo::sim_sectoring_pco(p, split, 10.0, cfg);
    CHECK(a.p_hat == b.p_hat);
    CHECK(a.std_err == b.std_err);
    CHECK(a.ci_lo == b.ci_lo);
    CHECK(a.ci_hi == b.ci_hi);
    auto cfg4 = cfg;
    cfg4.threads = 4;
    auto c = montecarlo::sim_sectoring_pco(p, split, 10.0, cfg4);
    CHECK(a.p_hat == c.p_hat);
    CHECK(a.std_err == c.std_err);
    auto d1 = montecarlo::sim_beamforming_pso(p, split, 3.0, quick_cfg(500, 5));
    auto d2 = montecarlo::sim_beamforming_pso(p, split, 3.0, quick_cfg(500, 5));
    CHECK(d1.p_hat == d2.p_hat);
    // different seeds explore different randomness
    auto e = montecarlo::sim_sectoring_pco(p, split, 10.0, quick_cfg(2000, 100));
    CHECK(e.p_hat != a.p_hat);
}

TEST_CASE("sectoring connection outage simulation matches the closed form") {
    auto p = base_params();
    auto est =
        montecarlo::sim_sectoring_pco(p, PowerSplit(0.5, 1.0), 10.0, quick_cfg(20000, 1));
    CHECK(within_3se(est, 0.10110189985834176));
    CHECK(est.trials == 20000);
    CHECK(est.ci_lo <= est.p_hat);
    CHECK(est.ci_hi >= est.p_hat);
    // a vanishing threshold never sees an outage
    auto zero =
        montecarlo::sim_sectoring_pco(p, PowerSplit(0.5, 1.0), 1e-12, quick_cfg(2000, 1));
    CHECK(zero.p_hat <= 1e-3);
    // near-empty network, same story
    auto sparse = p;
    sparse.lambda_l = 1e-8;
    auto silent = montecarlo::sim_sectoring_pco(sparse, PowerSplit(0.5, 1.0),
                                                10.0, quick_cfg(2000, 1));
    CHECK(silent.p_hat <= 1e-3);
}

TEST_CASE("sectoring outage drops when sectors narrow") {
    auto p2 = base_params();
    p2.n = 2;
    auto p4 = base_params();
    PowerSplit full(1.0, 1.0);
    auto wide = montecarlo::sim_sectoring_pco(p2, full, 10.0, quick_cfg(20000, 3));
    auto narrow = montecarlo::sim_sectoring_pco(p4, full, 10.0, quick_cfg(20000, 3));
    CHECK(narrow.ci_hi < wide.ci_lo);
    CHECK(within_3se(wide, sectoring::connection_outage(p2, full, 10.0)));
    CHECK(within_3se(narrow, sectoring::connection_outage(p4, full, 10.0)));
}

TEST_CASE("sectoring secrecy outage lands between its analytic bounds") {
    auto p = base_params();
    PowerSplit split(0.35, 1.0);
    auto est = montecarlo::sim_sectoring_pso(p, split, 1.0, quick_cfg(30000, 2));
    double ub = 0.026610517922154407;
    double lb = 0.026262657199931095;
    double se = std::max(est.std_err, std::sqrt(ub * (1 - ub) / 30000.0));
    CHECK(est.p_hat <= ub + 3.0 * se);
    CHECK(est.p_hat >= lb - 3.0 * se);
    // with no artificial noise every nearby eavesdropper wins
    auto noisy = p;
    noisy.lambda_e = 0.01;
    auto all = montecarlo::sim_sectoring_pso(noisy, PowerSplit(1.0, 1.0), 1.0,
                                             quick_cfg(2000, 2));
    CHECK(all.p_hat > 0.99);
}

TEST_CASE("beamforming connection outage simulation matches the exact form") {
    auto p = base_params();
    PowerSplit split(0.3, 1.0);
    auto est = montecarlo::sim_beamforming_pco(p, split, 3.0, quick_cfg(20000, 1));
    CHECK(within_3se(est, 0.053269039507910450));
    auto p2 = base_params();
    p2.n = 2;
    auto est2 =
        montecarlo::sim_beamforming_pco(p2, PowerSplit(0.5, 1.0), 3.0, quick_cfg(20000, 2));
    CHECK(within_3se(est2, 0.063940174501154801));
}

TEST_CASE("beamforming secrecy outage lands between its analytic bounds") {
    auto p = base_params();
    PowerSplit split(0.5, 1.0);
    auto est = montecarlo::sim_beamforming_pso(p, split, 3.0, quick_cfg(30000, 4));
    double ub = 0.0042351382161884159;
    double lb = 0.0041047625878221528;
    double se = std::max(est.std_err, std::sqrt(ub * (1 - ub) / 30000.0));
    CHECK(est.p_hat <= ub + 3.0 * se);
    CHECK(est.p_hat >= lb - 3.0 * se);
}

TEST_CASE("standard error shrinks like the square root of the trial count") {
    auto p = base_params();
    PowerSplit split(0.5, 1.0);
    auto small = montecarlo::sim_sectoring_pco(p, split, 10.0, quick_cfg(20000, 8));
    auto large = montecarlo::sim_sectoring_pco(p, split, 10.0, quick_cfg(40000, 8));
    double ratio = large.std_err / small.std_err;
    double expect = 1.0 / std::sqrt(2.0);
    CHECK(ratio > 0.8 * expect);
    CHECK(ratio < 1.2 * expect);
}

TEST_CASE("window size changes estimates within statistical noise") {
    auto p = base_params();
    PowerSplit split(0.5, 1.0);
    auto cfg1 = quick_cfg(20000, 6);
    auto cfg2 = cfg1;
    cfg2.window.radius = 2.0 * montecarlo::default_window_radius(p, cfg1.delta_trunc);
    auto a = montecarlo::sim_sectoring_pco(p, split, 10.0, cfg1);
    auto b = montecarlo::sim_sectoring_pco(p, split, 10.0, cfg2);
    double combined = std::sqrt(a.std_err * a.std_err + b.std_err * b.std_err);
    CHECK(std::fabs(a.p_hat - b.p_hat) < 3.0 * combined + 1e-3);
}

TEST_CASE("window defaults and truncation accounting") {
    auto p = base_params();
    CHECK(montecarlo::default_window_radius(p, 1e-3) ==
          doctest::Approx(50.0).epsilon(1e-12));
    // shallower path loss pushes the radius beyond the floor
    auto shallow = p;
    shallow.alpha = 2.1;
    double r_shallow = montecarlo::default_window_radius(shallow, 1e-3);
    CHECK(r_shallow > 50.0);
    CHECK(r_shallow == doctest::Approx(std::pow(1001.0, 10.0)).epsilon(1e-9));
    CHECK_THROWS_AS(montecarlo::default_window_radius(p, 0.0),
                    std::domain_error);
    CHECK_THROWS_AS(montecarlo::default_window_radius(p, 1.0),
                    std::domain_error);
    // the ignored-tail bound decays with the window and vanishes without
    // eavesdroppers
    PowerSplit split(0.5, 1.0);
    double t50 = montecarlo::ignored_tail_bound(p, split, 1.0, 50.0, false);
    double t100 = montecarlo::ignored_tail_bound(p, split, 1.0, 100.0, false);
    CHECK(t50 > 0.0);
    CHECK(t100 < t50);
    auto quiet = p;
    quiet.lambda_e = 0.0;
    CHECK(montecarlo::ignored_tail_bound(quiet, split, 1.0, 50.0, false) == 0.0);
}

TEST_CASE("simulation configurations are validated") {
    auto p = base_params();
    PowerSplit split(0.5, 1.0);
    auto few = quick_cfg(10, 1);
    CHECK_THROWS_AS(montecarlo::sim_sectoring_pco(p, split, 1.0, few),
                    std::domain_error);
    auto tight = quick_cfg(1000, 1);
    tight.window.radius = 5.0; // below the 10 r floor
    CHECK_THROWS_AS(montecarlo::sim_sectoring_pco(p, split, 1.0, tight),
                    std::domain_error);
    CHECK_THROWS_AS(montecarlo::sim_beamforming_pso(p, split, -1.0,
                                                    quick_cfg(1000, 1)),
                    std::domain_error);
}
