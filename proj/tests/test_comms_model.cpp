#include <catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "jrc/comms_model.hpp"
#include "jrc/errors.hpp"
#include "oracles.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace jrc;

namespace {

ScenarioConfig to_cfg(const oracle::Params& p) {
    ScenarioConfig c = default_scenario();
    c.h1_gain = p.h1;
    c.h2_gain = p.h2;
    c.sigma1_sq = p.s1;
    c.sigma2_sq = p.s2;
    c.total_power_mw = p.P;
    return c;
}

oracle::Params random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    oracle::Params p;
    p.h1 = oracle::db(-110.0 + 30.0 * u(rng));
    p.h2 = p.h1 * oracle::db(-0.5 - 20.0 * u(rng));
    p.s1 = oracle::db(-112.0 + 12.0 * u(rng));
    p.s2 = p.s1 * oracle::db(6.0 * u(rng));
    p.P = oracle::db(-5.0 + 15.0 * u(rng));
    return p;
}

}  // namespace

TEST_CASE("SINRs at the closed-form optimum for r02 = 1, ar = 0.5", "[comms]") {
    const ScenarioConfig cfg = default_scenario();
    const PowerAllocation alloc{0.09189, 0.40811, 0.5};
    const Sinr s = compute_sinr(cfg, alloc);
    CHECK_THAT(s.gamma1, WithinRel(2.9057, 1e-3));
    CHECK_THAT(s.gamma2, WithinRel(1.0000, 1e-3));
    CHECK_THAT(s.gamma2_bar, WithinRel(3.3040, 1e-3));

    const oracle::Rates o = oracle::rates(oracle::Params{}, alloc.a1_sq, alloc.a2_sq);
    CHECK_THAT(s.gamma1, WithinRel(o.g1, 1e-12));
    CHECK_THAT(s.gamma2, WithinRel(o.g2, 1e-12));
    CHECK_THAT(s.gamma2_bar, WithinRel(o.g2bar, 1e-12));
}

TEST_CASE("rate_report examples", "[comms]") {
    const ScenarioConfig cfg = default_scenario();

    const RateReport a = rate_report(cfg, {0.09189, 0.40811, 0.5});
    CHECK_THAT(a.r2, WithinAbs(1.0, 1e-3));
    CHECK_THAT(a.r1, WithinAbs(1.9657, 1e-3));
    CHECK_THAT(a.r_sum, WithinAbs(2.9657, 1e-3));
    CHECK_FALSE(a.r2_limited_by_sic);

    const RateReport b = rate_report(cfg, {0.057822, 0.233598, 0.70858});
    CHECK_THAT(b.r1, WithinAbs(1.5, 1e-4));
    CHECK_THAT(b.r2, WithinAbs(0.7, 1e-4));

    for (const double ar : {0.0, 0.3, 0.99}) {
        const RateReport z = rate_report(cfg, {0.0, 0.0, ar});
        CHECK(z.r_sum == 0.0);
    }
}

TEST_CASE("rates agree with the oracle and scale coherently", "[comms][property]") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const oracle::Params p = random_params(rng);
        const double a1 = 0.5 * u(rng);
        const double a2 = (1.0 - a1) * u(rng);
        const ScenarioConfig cfg = to_cfg(p);
        const RateReport r = rate_report(cfg, {a1, a2, 1.0 - a1 - a2});
        const oracle::Rates o = oracle::rates(p, a1, a2);
        CHECK_THAT(r.r1, WithinAbs(o.r1, 1e-12));
        CHECK_THAT(r.r2, WithinAbs(o.r2, 1e-12));

        // Multiplying every power by c and every gain by 1/c leaves the SINRs alone.
        const double c = oracle::db(-20.0 + 40.0 * u(rng));
        ScenarioConfig scaled = cfg;
        scaled.total_power_mw *= c;
        scaled.h1_gain /= c;
        scaled.h2_gain /= c;
        const RateReport rs = rate_report(scaled, {a1, a2, 1.0 - a1 - a2});
        CHECK_THAT(rs.r_sum, WithinAbs(r.r_sum, 1e-10));

        // So does scaling the transmit power together with both noise powers.
        ScenarioConfig noisy = cfg;
        noisy.total_power_mw *= c;
        noisy.sigma1_sq *= c;
        noisy.sigma2_sq *= c;
        const Sinr s0 = compute_sinr(cfg, {a1, a2, 1.0 - a1 - a2});
        const Sinr s1 = compute_sinr(noisy, {a1, a2, 1.0 - a1 - a2});
        CHECK_THAT(s1.gamma1, WithinRel(s0.gamma1, 1e-12));
        CHECK_THAT(s1.gamma2, WithinRel(s0.gamma2, 1e-12));
        CHECK_THAT(s1.gamma2_bar, WithinRel(s0.gamma2_bar, 1e-12));
        CHECK_THAT(rate_report(noisy, {a1, a2, 1.0 - a1 - a2}).r_sum, WithinRel(r.r_sum, 1e-12));
    }
}

TEST_CASE("SIC branch never limits the weak user when sigma1 <= sigma2", "[comms][property]") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const oracle::Params p = random_params(rng);
        const double a1 = u(rng);
        const double a2 = (1.0 - a1) * u(rng);
        const Sinr s = compute_sinr(to_cfg(p), {a1, a2, 0.0});
        CHECK(s.gamma2_bar >= s.gamma2);
    }
}

TEST_CASE("Jain fairness examples", "[comms]") {
    CHECK(jain_fairness(std::array{1.0, 1.0}) == 1.0);
    CHECK_THAT(jain_fairness(std::array{3.0, 1.0}), WithinAbs(0.8, 1e-15));
    CHECK_THAT(jain_fairness(std::array{4.0546, 0.7}), WithinAbs(0.6678, 1e-3));
    CHECK_THAT(jain_fairness(std::array{2.0, 0.0}), WithinAbs(0.5, 1e-15));

    CHECK_THROWS_AS(jain_fairness(std::array{0.0, 0.0}), UndefinedMetricError);
    CHECK_THROWS_AS(jain_fairness(std::vector<double>{}), ContractError);
    CHECK_THROWS_AS(jain_fairness(std::array{1.0, -0.5}), ContractError);
}

TEST_CASE("Jain fairness is scale invariant and bounded", "[comms][property]") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const std::array x{u(rng), u(rng)};
        const double j = jain_fairness(x);
        CHECK(j > 0.0);
        CHECK(j <= 1.0 + 1e-15);
        CHECK_THAT(j, WithinRel(oracle::jain(x[0], x[1]), 1e-13));
        const double c = 0.001 + u(rng);
        CHECK_THAT(jain_fairness(std::array{c * x[0], c * x[1]}), WithinRel(j, 1e-13));
    }
}

TEST_CASE("f1 derivative", "[comms]") {
    const oracle::Params p;
    const ScenarioConfig cfg = default_scenario();
    const double kappa = 0.5;

    SECTION("negative for every feasible split at kappa = 0.5") {
        for (int i = 1; i < 100; ++i) {
            const double a2 = kappa * i / 100.0;
            const double d = f1_derivative(cfg, {kappa - a2, a2, 1.0 - kappa});
            CHECK(d < 0.0);
            CHECK_THAT(d, WithinRel(oracle::f1_slope(p, kappa, a2), 1e-6));
        }
    }

    SECTION("f1_product matches the oracle") {
        CHECK_THAT(f1_product(cfg, {0.2, 0.3, 0.5}), WithinRel(oracle::f1(p, 0.5, 0.3), 1e-13));
    }

    SECTION("vanishes when h1 sigma2 == h2 sigma1") {
        ScenarioConfig c = cfg;
        c.sigma1_sq = c.sigma2_sq * c.h1_gain / c.h2_gain;
        CHECK_THAT(f1_derivative(c, {0.1, 0.4, 0.5}), WithinAbs(0.0, 1e-9));
    }

    SECTION("precondition: a1 + a2 + ar must be 1") {
        CHECK_THROWS_AS(f1_derivative(cfg, {0.1, 0.2, 0.5}), ContractError);
    }
}

TEST_CASE("f1 derivative agrees with finite differences on random scenarios", "[comms][property]") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (int i = 0; i < 300; ++i) {
        const oracle::Params p = random_params(rng);
        const double kappa = u(rng);
        const double a2 = kappa * u(rng);
        const double d = f1_derivative(to_cfg(p), {kappa - a2, a2, 1.0 - kappa});
        CHECK(d < 0.0);
        CHECK_THAT(d, WithinRel(oracle::f1_slope(p, kappa, a2), 1e-5));
    }
}
