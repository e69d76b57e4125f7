#include "ansec/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ansec/specfun.hpp"

namespace ansec::montecarlo {

namespace {

constexpr double kZ95 = 1.959963984540054;

double resolve_radius(const NetworkParams& params, const McConfig& cfg) {
    double radius = cfg.window.radius > 0.0
                        ? cfg.window.radius
                        : default_window_radius(params, cfg.delta_trunc);
    if (radius < 10.0 * params.r)
        throw std::domain_error("window radius must be at least 10 r");
    return radius;
}

McEstimate make_estimate(long hits, long trials, std::uint64_t seed) {
    McEstimate e;
    e.trials = trials;
    e.seed = seed;
    double n = static_cast<double>(trials);
    double p = static_cast<double>(hits) / n;
    e.p_hat = p;
    e.std_err = std::sqrt(p * (1.0 - p) / n);
    double z2 = kZ95 * kZ95;
    double denom = 1.0 + z2 / n;
    double center = (p + z2 / (2.0 * n)) / denom;
    double half = kZ95 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    e.ci_lo = std::max(0.0, center - half);
    e.ci_hi = std::min(1.0, center + half);
    return e;
}

// Runs trials with one independent RNG substream per trial index and sums
// indicator counts per worker, so the result is identical for any thread
// count or scheduling.
McEstimate run_trials(const McConfig& cfg,
                      const std::function<bool(Rng&)>& trial) {
    if (cfg.trials < 100)
        throw std::domain_error("trials must be at least 100");
    long trials = cfg.trials;
    int nthreads = cfg.threads < 1 ? 1 : cfg.threads;
    if (static_cast<long>(nthreads) > trials)
        nthreads = static_cast<int>(trials);

    std::vector<long> counts(nthreads, 0);
    auto worker = [&](int t) {
        long begin = trials * t / nthreads;
        long end = trials * (t + 1) / nthreads;
        long hits = 0;
        for (long i = begin; i < end; ++i) {
            Rng rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(i));
            if (trial(rng))
                ++hits;
        }
        counts[t] = hits;
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back(worker, t);
        for (auto& th : pool)
            th.join();
    }
    long hits = 0;
    for (long c : counts)
        hits += c;
    return make_estimate(hits, trials, cfg.seed);
}

} // namespace

double default_window_radius(const NetworkParams& params, double delta_trunc) {
    params.validate();
    if (!(delta_trunc > 0.0) || !(delta_trunc < 1.0))
        throw std::domain_error("delta_trunc must lie in (0,1)");
    double bias_radius =
        params.r *
        std::pow((1.0 + delta_trunc) / delta_trunc, 1.0 / (params.alpha - 2.0));
    return std::max(50.0 * params.r, bias_radius);
}

std::vector<Point> sample_ppp(double density, const SimWindow& window,
                              Rng& rng) {
    if (!(density >= 0.0))
        throw std::domain_error("density must be nonnegative");
    if (!(window.radius > 0.0))
        throw std::domain_error("window radius must be positive");
    double mean = M_PI * window.radius * window.radius * density;
    long count = rng.poisson(mean);
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        double rad = window.radius * std::sqrt(rng.uniform());
        double ang = 2.0 * M_PI * rng.uniform();
        pts.push_back({rad * std::cos(ang), rad * std::sin(ang)});
    }
    return pts;
}

double sample_interference_power(const beamforming::InterferencePdfSpec& spec,
                                 Rng& rng) {
    // Unit-variance complex entry -> squared magnitude (a^2+b^2)/2 with a,b
    // standard normal. First entry rides the interferer's beam at p_i; the
    // remaining n-1 squared magnitudes share p_a.
    double a = rng.normal(), b = rng.normal();
    double proj = 0.5 * (a * a + b * b);
    double rest = 0.0;
    for (int i = 1; i < spec.n; ++i) {
        double c = rng.normal(), d = rng.normal();
        rest += 0.5 * (c * c + d * d);
    }
    return spec.p_i() * proj + spec.p_a() / (spec.n - 1) * rest;
}

McEstimate sim_sectoring_pco(const NetworkParams& params,
                             const PowerSplit& split, double beta_b,
                             const McConfig& cfg) {
    params.validate();
    if (!(beta_b > 0.0))
        throw std::domain_error("beta_b must be positive");
    SimWindow win{resolve_radius(params, cfg)};
    double alpha = params.alpha;
    double p_info = split.p_i;
    double p_noise = split.p_a / (params.n - 1);
    double inv_n = 1.0 / params.n;
    double signal_base = p_info * std::pow(params.r, -alpha);
    double lambda_l = params.lambda_l;
    auto trial = [=](Rng& rng) -> bool {
        double own = rng.expo();
        std::vector<Point> pts = sample_ppp(lambda_l, win, rng);
        double interference = 0.0;
        for (const Point& pt : pts) {
            double d2 = pt.x * pt.x + pt.y * pt.y;
            double power = rng.uniform() <= inv_n ? p_info : p_noise;
            interference += power * rng.expo() * std::pow(d2, -0.5 * alpha);
        }
        return signal_base * own <= beta_b * interference;
    };
    return run_trials(cfg, trial);
}

McEstimate sim_sectoring_pso(const NetworkParams& params,
                             const PowerSplit& split, double beta_e,
                             const McConfig& cfg) {
    params.validate();
    if (!(beta_e > 0.0))
        throw std::domain_error("beta_e must be positive");
    SimWindow win{resolve_radius(params, cfg)};
    double alpha = params.alpha;
    double p_sig = split.p_i;
    double p_noise = split.p_a / (params.n - 1);
    double lam_e = params.lambda_e / params.n;
    double lam_jam = params.lambda_l * (params.n - 1) / params.n;
    auto trial = [=](Rng& rng) -> bool {
        std::vector<Point> eaves = sample_ppp(lam_e, win, rng);
        if (eaves.empty())
            return false;
        std::vector<Point> jammers = sample_ppp(lam_jam, win, rng);
        for (const Point& z : eaves) {
            double dz2 = z.x * z.x + z.y * z.y;
            double sig = p_sig * rng.expo() * std::pow(dz2, -0.5 * alpha);
            double noise = 0.0;
            for (const Point& x : jammers) {
                double dx = x.x - z.x, dy = x.y - z.y;
                noise += p_noise * rng.expo() *
                         std::pow(dx * dx + dy * dy, -0.5 * alpha);
            }
            if (sig > beta_e * noise)
                return true;
        }
        return false;
    };
    return run_trials(cfg, trial);
}

McEstimate sim_beamforming_pco(const NetworkParams& params,
                               const PowerSplit& split, double beta_b,
                               const McConfig& cfg) {
    params.validate();
    if (!(beta_b > 0.0))
        throw std::domain_error("beta_b must be positive");
    SimWindow win{resolve_radius(params, cfg)};
    double alpha = params.alpha;
    int n = params.n;
    beamforming::InterferencePdfSpec spec(split.phi, params.p_total, n);
    double signal_base = split.p_i * std::pow(params.r, -alpha);
    double lambda_l = params.lambda_l;
    auto trial = [=](Rng& rng) -> bool {
        double own = rng.gamma_int(n);
        std::vector<Point> pts = sample_ppp(lambda_l, win, rng);
        double interference = 0.0;
        for (const Point& pt : pts) {
            double d2 = pt.x * pt.x + pt.y * pt.y;
            interference +=
                sample_interference_power(spec, rng) * std::pow(d2, -0.5 * alpha);
        }
        return signal_base * own <= beta_b * interference;
    };
    return run_trials(cfg, trial);
}

McEstimate sim_beamforming_pso(const NetworkParams& params,
                               const PowerSplit& split, double beta_e,
                               const McConfig& cfg) {
    params.validate();
    if (!(beta_e > 0.0))
        throw std::domain_error("beta_e must be positive");
    SimWindow win{resolve_radius(params, cfg)};
    double alpha = params.alpha;
    int n = params.n;
    double p_sig = split.p_i;
    double p_an = split.p_a / (n - 1);
    double lambda_l = params.lambda_l;
    double lambda_e = params.lambda_e;
    auto trial = [=](Rng& rng) -> bool {
        std::vector<Point> eaves = sample_ppp(lambda_e, win, rng);
        if (eaves.empty())
            return false;
        std::vector<Point> interferers = sample_ppp(lambda_l, win, rng);
        for (const Point& z : eaves) {
            double dz2 = z.x * z.x + z.y * z.y;
            double fall = std::pow(dz2, -0.5 * alpha);
            double sig = p_sig * rng.expo() * fall;
            // The typical transmitter's own artificial noise reaches the
            // eavesdropper over the same distance.
            double noise = p_an * rng.gamma_int(n - 1) * fall;
            for (const Point& x : interferers) {
                double dx = x.x - z.x, dy = x.y - z.y;
                noise += p_an * rng.gamma_int(n - 1) *
                         std::pow(dx * dx + dy * dy, -0.5 * alpha);
            }
            if (sig > beta_e * noise)
                return true;
        }
        return false;
    };
    return run_trials(cfg, trial);
}

double ignored_tail_bound(const NetworkParams& params, const PowerSplit& split,
                          double beta_e, double radius, bool is_beamforming) {
    params.validate();
    if (!(beta_e > 0.0))
        throw std::domain_error("beta_e must be positive");
    if (!(radius > 0.0))
        throw std::domain_error("radius must be positive");
    if (params.lambda_e == 0.0)
        return 0.0;
    if (split.phi == 1.0)
        return std::numeric_limits<double>::infinity();
    double alpha = params.alpha;
    double lam_eff =
        is_beamforming ? params.lambda_e : params.lambda_e / params.n;
    double lam_jam = is_beamforming
                         ? params.lambda_l
                         : params.lambda_l * (params.n - 1) / params.n;
    double p_n = split.p_a / (params.n - 1);
    // E[d^alpha] of the nearest jammer: d^2 ~ Exp(pi lam_jam).
    double mean_dalpha = specfun::gamma_fn(1.0 + alpha / 2.0) /
                         std::pow(M_PI * lam_jam, alpha / 2.0);
    return lam_eff * 2.0 * M_PI * (split.p_i / (beta_e * p_n)) * mean_dalpha *
           std::pow(radius, 2.0 - alpha) / (alpha - 2.0);
}

} // namespace ansec::montecarlo
