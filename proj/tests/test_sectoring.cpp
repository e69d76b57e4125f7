#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ansec/errors.hpp"
#include "ansec/sectoring.hpp"
#include "ansec/specfun.hpp"
#include "ansec/throughput.hpp"
#include "ansec/types.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
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

// Invert a strictly monotone function on [lo, hi] by plain bisection.
double bisect(const std::function<double(double)>& f, double target, double lo,
              double hi, bool increasing) {
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        bool high = f(mid) > target;
        if (high == increasing)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("connection outage reference values") {
    auto p = base_params();
    CHECK(sectoring::connection_outage(p, PowerSplit(0.5, 1.0), 1.0) ==
          doctest::Approx(0.033143629749955940).epsilon(1e-13));
    // beta_b = 10 grid
    CHECK(sectoring::connection_outage(p, PowerSplit(0.2, 1.0), 10.0) ==
          doctest::Approx(0.15983599402436455).epsilon(1e-13));
    CHECK(sectoring::connection_outage(p, PowerSplit(0.5, 1.0), 10.0) ==
          doctest::Approx(0.10110189985834176).epsilon(1e-13));
    CHECK(sectoring::connection_outage(p, PowerSplit(0.8, 1.0), 10.0) ==
          doctest::Approx(0.070212597022177913).epsilon(1e-13));
}

TEST_CASE("connection outage exponent scales linearly in density and area") {
    auto p = base_params();
    PowerSplit split(0.35, 1.0);
    double s1 = 1.0 - sectoring::connection_outage(p, split, 2.0);
    auto p2 = p;
    p2.lambda_l *= 2.0;
    double s2 = 1.0 - sectoring::connection_outage(p2, split, 2.0);
    CHECK(s2 == doctest::Approx(s1 * s1).epsilon(1e-12));
    auto pr = p;
    pr.r *= std::sqrt(3.0);
    double s3 = 1.0 - sectoring::connection_outage(pr, split, 2.0);
    CHECK(s3 == doctest::Approx(s1 * s1 * s1).epsilon(1e-12));
}

TEST_CASE("connection outage at full information power has no noise term") {
    auto p = base_params();
    double direct =
        -std::expm1(-std::sqrt(10.0) * p.lambda_l *
                    specfun::c_alpha_n(p.alpha, 2) * p.r * p.r / p.n);
    CHECK(sectoring::connection_outage(p, PowerSplit(1.0, 1.0), 10.0) ==
          doctest::Approx(direct).epsilon(1e-14));
}

TEST_CASE("connection outage monotonicity") {
    auto p = base_params();
    // decreasing in phi: more information power means fewer outages
    double prev = 1.0;
    for (double phi = 0.05; phi <= 0.999; phi += 0.05) {
        double cur = sectoring::connection_outage(p, PowerSplit(phi, 1.0), 5.0);
        CHECK(cur < prev);
        prev = cur;
    }
    // increasing in the SIR threshold
    prev = 0.0;
    for (double beta = 0.5; beta <= 64.0; beta *= 2.0) {
        double cur =
            sectoring::connection_outage(p, PowerSplit(0.4, 1.0), beta);
        CHECK(cur > prev);
        prev = cur;
    }
    // more sectors help when the threshold and split are fixed
    auto p8 = p;
    p8.n = 8;
    CHECK(sectoring::connection_outage(p8, PowerSplit(0.4, 1.0), 5.0) <
          sectoring::connection_outage(p, PowerSplit(0.4, 1.0), 5.0));
}

TEST_CASE("secrecy outage bound reference values") {
    auto p = base_params();
    CHECK(sectoring::secrecy_outage_ub(p, PowerSplit(0.5, 1.0), 1.0) ==
          doctest::Approx(0.036087985396050874).epsilon(1e-13));
    CHECK(sectoring::secrecy_outage_lb(p, PowerSplit(0.5, 1.0), 1.0) ==
          doctest::Approx(0.035452204704133009).epsilon(1e-13));
    CHECK(sectoring::secrecy_outage_ub(p, PowerSplit(0.35, 1.0), 1.0) ==
          doctest::Approx(0.026610517922154407).epsilon(1e-13));
    CHECK(sectoring::secrecy_outage_lb(p, PowerSplit(0.35, 1.0), 1.0) ==
          doctest::Approx(0.026262657199931095).epsilon(1e-13));
}

TEST_CASE("secrecy outage bounds bracket and converge") {
    auto p = base_params();
    for (double phi : {0.1, 0.3, 0.6, 0.9}) {
        for (double beta : {0.25, 1.0, 8.0}) {
            double ub = sectoring::secrecy_outage_ub(p, PowerSplit(phi, 1.0), beta);
            double lb = sectoring::secrecy_outage_lb(p, PowerSplit(phi, 1.0), beta);
            CHECK(lb <= ub);
            CHECK(lb > 0.0);
            CHECK(ub < 1.0);
        }
    }
    // As the eavesdropper density ratio shrinks, both bounds approach the
    // same first-order term.
    auto tiny = p;
    tiny.lambda_e = 1e-8;
    double ub = sectoring::secrecy_outage_ub(tiny, PowerSplit(0.5, 1.0), 1.0);
    double lb = sectoring::secrecy_outage_lb(tiny, PowerSplit(0.5, 1.0), 1.0);
    CHECK(ub / lb == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("secrecy outage depends on densities only through their ratio") {
    auto p = base_params();
    auto scaled = p;
    scaled.lambda_l *= 7.5;
    scaled.lambda_e *= 7.5;
    for (double phi : {0.2, 0.7}) {
        CHECK(sectoring::secrecy_outage_ub(scaled, PowerSplit(phi, 1.0), 2.0) ==
              doctest::Approx(sectoring::secrecy_outage_ub(p, PowerSplit(phi, 1.0), 2.0))
                  .epsilon(1e-14));
        CHECK(sectoring::secrecy_outage_lb(scaled, PowerSplit(phi, 1.0), 2.0) ==
              doctest::Approx(sectoring::secrecy_outage_lb(p, PowerSplit(phi, 1.0), 2.0))
                  .epsilon(1e-14));
    }
}

TEST_CASE("secrecy outage monotonicity and edge cases") {
    auto p = base_params();
    // more information power (less noise) leaks more
    double prev_ub = 0.0, prev_lb = 0.0;
    for (double phi = 0.05; phi < 1.0; phi += 0.05) {
        double ub = sectoring::secrecy_outage_ub(p, PowerSplit(phi, 1.0), 1.0);
        double lb = sectoring::secrecy_outage_lb(p, PowerSplit(phi, 1.0), 1.0);
        CHECK(ub > prev_ub);
        CHECK(lb > prev_lb);
        prev_ub = ub;
        prev_lb = lb;
    }
    // phi = 1: nothing jams the eavesdroppers
    CHECK(sectoring::secrecy_outage_ub(p, PowerSplit(1.0, 1.0), 1.0) == 1.0);
    CHECK(sectoring::secrecy_outage_lb(p, PowerSplit(1.0, 1.0), 1.0) == 1.0);
    // no eavesdroppers, no secrecy outage
    auto quiet = p;
    quiet.lambda_e = 0.0;
    CHECK(sectoring::secrecy_outage_ub(quiet, PowerSplit(0.5, 1.0), 1.0) == 0.0);
    CHECK(sectoring::secrecy_outage_lb(quiet, PowerSplit(0.5, 1.0), 1.0) == 0.0);
}

TEST_CASE("threshold inversions agree with bisection oracles") {
    auto p = base_params();
    for (double phi : {0.2, 0.5, 0.85}) {
        PowerSplit split(phi, 1.0);
        for (double sigma : {0.05, 0.1, 0.3}) {
            double beta = sectoring::beta_b_from_sigma(p, split, sigma);
            CHECK(sectoring::connection_outage(p, split, beta) ==
                  doctest::Approx(sigma).epsilon(1e-12));
            double oracle = bisect(
                [&](double b) { return sectoring::connection_outage(p, split, b); },
                sigma, 1e-9, 1e9, true);
            CHECK(beta == doctest::Approx(oracle).epsilon(1e-9));
        }
        for (double eps : {0.01, 0.05, 0.2}) {
            double beta = sectoring::beta_e_from_epsilon(p, split, eps);
            CHECK(sectoring::secrecy_outage_ub(p, split, beta) ==
                  doctest::Approx(eps).epsilon(1e-12));
            double oracle = bisect(
                [&](double b) { return sectoring::secrecy_outage_ub(p, split, b); },
                eps, 1e-9, 1e12, false);
            CHECK(beta == doctest::Approx(oracle).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS(
        sectoring::beta_e_from_epsilon(p, PowerSplit(1.0, 1.0), 0.01),
        infeasible_error);
    auto quiet = p;
    quiet.lambda_e = 0.0;
    CHECK_THROWS_AS(
        sectoring::beta_e_from_epsilon(quiet, PowerSplit(0.5, 1.0), 0.01),
        std::domain_error);
}

TEST_CASE("capacity lower bound matches an independent reconstruction") {
    auto p = base_params();
    double sigma = 0.1, eps = 0.01;
    for (double phi = 0.05; phi < 1.0; phi += 0.037) {
        PowerSplit split(phi, 1.0);
        double cap = sectoring::capacity_lb(p, split, sigma, eps);
        double bb = bisect(
            [&](double b) { return sectoring::connection_outage(p, split, b); },
            sigma, 1e-9, 1e9, true);
        double be = bisect(
            [&](double b) { return sectoring::secrecy_outage_ub(p, split, b); },
            eps, 1e-9, 1e12, false);
        double diff = std::log2((1.0 + bb) / (1.0 + be));
        double oracle = (1.0 - sigma) * p.lambda_l * (diff > 0.0 ? diff : 0.0);
        CHECK(cap == doctest::Approx(oracle).epsilon(1e-3));
        CHECK(std::fabs(cap - oracle) < 1e-9);
    }
    // full information power carries no secrecy
    CHECK(sectoring::capacity_lb(p, PowerSplit(1.0, 1.0), sigma, eps) == 0.0);
}

TEST_CASE("closed-form optimum matches frozen values on the n sweep") {
    auto p = base_params();
    const std::vector<std::pair<int, double>> expect = {
        {4, 0.067697645197482131},
        {8, 0.32492391637368913},
        {16, 0.54890855279818923},
        {32, 0.72317258174277886},
        {64, 0.84273652434449249},
    };
    for (auto& [n, phi] : expect) {
        auto pn = p;
        pn.n = n;
        auto split = sectoring::optimal_phi_alpha4(pn, 0.1, 0.01);
        CHECK(split.phi == doctest::Approx(phi).epsilon(1e-12));
    }
    CHECK(std::string(sectoring::alpha4_selfcheck_note()).empty());
}

TEST_CASE("closed-form and numeric optima agree") {
    auto p = base_params();
    for (int n : {4, 8, 16}) {
        auto pn = p;
        pn.n = n;
        auto closed = sectoring::optimal_phi_alpha4(pn, 0.1, 0.01);
        auto numeric = sectoring::optimal_phi_numeric(pn, 0.1, 0.01);
        CHECK(std::fabs(closed.phi - numeric.phi) < 1e-4);
        double c_closed = sectoring::capacity_lb(pn, closed, 0.1, 0.01);
        double c_numeric = sectoring::capacity_lb(pn, numeric, 0.1, 0.01);
        CHECK(c_closed == doctest::Approx(c_numeric).epsilon(1e-9));
    }
}

TEST_CASE("optimum split grows with the sector count") {
    auto p = base_params();
    double prev = 0.0;
    for (int n : {4, 8, 16, 32, 64}) {
        auto pn = p;
        pn.n = n;
        double phi = sectoring::optimal_phi_alpha4(pn, 0.1, 0.01).phi;
        CHECK(phi > prev);
        prev = phi;
    }
    CHECK(prev > 0.8);
}

TEST_CASE("two sectors cannot meet the constraints at the reference point") {
    auto p = base_params();
    p.n = 2;
    auto inter = sectoring::alpha4_intermediates(p, 0.1, 0.01);
    CHECK(inter.varrho <= inter.varsigma);
    CHECK_THROWS_AS(sectoring::optimal_phi_alpha4(p, 0.1, 0.01),
                    infeasible_error);
    CHECK_THROWS_AS(sectoring::optimal_phi_numeric(p, 0.1, 0.01),
                    infeasible_error);
    for (double phi = 0.05; phi < 1.0; phi += 0.05)
        CHECK(sectoring::capacity_lb(p, PowerSplit(phi, 1.0), 0.1, 0.01) == 0.0);
}

TEST_CASE("closed form is restricted to alpha = 4") {
    auto p = base_params();
    p.alpha = 3.0;
    CHECK_THROWS_AS(sectoring::optimal_phi_alpha4(p, 0.1, 0.01),
                    std::domain_error);
    // the numeric optimizer still works there
    auto split = sectoring::optimal_phi_numeric(p, 0.1, 0.01);
    CHECK(split.phi > 0.0);
    CHECK(split.phi < 1.0);
}

TEST_CASE("capacity is unimodal in the split on the feasible range") {
    auto p = base_params();
    p.n = 8;
    double sigma = 0.1, eps = 0.01;
    std::vector<double> vals;
    for (double phi = 0.01; phi < 1.0; phi += 0.01)
        vals.push_back(
            sectoring::capacity_lb(p, PowerSplit(phi, 1.0), sigma, eps));
    int sign_changes = 0;
    for (size_t i = 1; i + 1 < vals.size(); ++i) {
        double d1 = vals[i] - vals[i - 1];
        double d2 = vals[i + 1] - vals[i];
        if (d1 > 0 && d2 < 0)
            ++sign_changes;
    }
    CHECK(sign_changes == 1);
}

TEST_CASE("parameter validation rejects out-of-range inputs") {
    auto p = base_params();
    CHECK_THROWS_AS(PowerSplit(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(PowerSplit(1.2, 1.0), std::domain_error);
    auto bad = p;
    bad.alpha = 2.0;
    CHECK_THROWS_AS(sectoring::connection_outage(bad, PowerSplit(0.5, 1.0), 1.0),
                    std::domain_error);
    auto bad_n = p;
    bad_n.n = 1;
    CHECK_THROWS_AS(
        sectoring::connection_outage(bad_n, PowerSplit(0.5, 1.0), 1.0),
        std::domain_error);
    CHECK_THROWS_AS(sectoring::beta_b_from_sigma(p, PowerSplit(0.5, 1.0), 1.5),
                    std::domain_error);
    CHECK_THROWS_AS(
        sectoring::beta_e_from_epsilon(p, PowerSplit(0.5, 1.0), 0.0),
        std::domain_error);
}
