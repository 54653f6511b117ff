#pragma once

#include <span>

#include "jrc/scenario.hpp"

namespace jrc {

struct Sinr {
    double gamma1 = 0.0;      ///< user 1 after SIC
    double gamma2 = 0.0;      ///< s2 at user 2, s1 as interference
    double gamma2_bar = 0.0;  ///< s2 at user 1 during SIC
};

struct RateReport {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double gamma2_bar = 0.0;
    double r1 = 0.0;  ///< bits/s/Hz
    double r2 = 0.0;  ///< min of the direct and SIC branches
    double r_sum = 0.0;
    bool r2_limited_by_sic = false;
};

/// SINRs of the two-user superposition downlink. The SIC-branch noise is
/// the user-1 receiver noise sigma1^2. All received powers scale with
/// total_power_mw.
Sinr compute_sinr(const ScenarioConfig& cfg, const PowerAllocation& alloc);

RateReport rate_report(const ScenarioConfig& cfg, const PowerAllocation& alloc);

/// Normalized Jain index (sum x)^2 / (n * sum x^2), in (0, 1].
/// Throws ContractError on empty/negative input and UndefinedMetricError
/// when every rate is zero.
double jain_fairness(std::span<const double> rates);

/// f1 = (1 + gamma1)(1 + gamma2), whose log2 is the sum rate.
double f1_product(const ScenarioConfig& cfg, const PowerAllocation& alloc);

/// d f1 / d alpha_2^2 along the line alpha_1^2 + alpha_2^2 = kappa = 1 - alpha_r^2.
/// Negative whenever |h1|^2 sigma2^2 > |h2|^2 sigma1^2, which makes the
/// sum rate decrease as power moves to the weak user.
double f1_derivative(const ScenarioConfig& cfg, const PowerAllocation& alloc);

}  // namespace jrc
