#include "jrc/comms_model.hpp"

#include <cmath>
#include <numeric>

#include "jrc/errors.hpp"

namespace jrc {

Sinr compute_sinr(const ScenarioConfig& cfg, const PowerAllocation& alloc) {
    const double p = cfg.total_power_mw;
    const double rx1 = cfg.h1_gain * p;
    const double rx2 = cfg.h2_gain * p;

    Sinr s;
    s.gamma1 = alloc.a1_sq * rx1 / cfg.sigma1_sq;
    s.gamma2 = alloc.a2_sq * rx2 / (rx2 * alloc.a1_sq + cfg.sigma2_sq);
    s.gamma2_bar = alloc.a2_sq * rx1 / (rx1 * alloc.a1_sq + cfg.sigma1_sq);
    return s;
}

RateReport rate_report(const ScenarioConfig& cfg, const PowerAllocation& alloc) {
    const Sinr s = compute_sinr(cfg, alloc);
    RateReport r;
    r.gamma1 = s.gamma1;
    r.gamma2 = s.gamma2;
    r.gamma2_bar = s.gamma2_bar;
    r.r1 = std::log2(1.0 + s.gamma1);
    const double direct = std::log2(1.0 + s.gamma2);
    const double sic = std::log2(1.0 + s.gamma2_bar);
    r.r2_limited_by_sic = sic < direct;
    r.r2 = r.r2_limited_by_sic ? sic : direct;
    r.r_sum = r.r1 + r.r2;
    return r;
}

double jain_fairness(std::span<const double> rates) {
    if (rates.empty()) throw ContractError("jain_fairness: need at least one rate");
    double sum = 0.0;
    double sum_sq = 0.0;
    for (const double x : rates) {
        if (!(x >= 0.0)) throw ContractError("jain_fairness: rates must be non-negative");
        sum += x;
        sum_sq += x * x;
    }
    if (sum_sq == 0.0) throw UndefinedMetricError("jain_fairness: all rates are zero");
    return sum * sum / (static_cast<double>(rates.size()) * sum_sq);
}

double f1_product(const ScenarioConfig& cfg, const PowerAllocation& alloc) {
    const Sinr s = compute_sinr(cfg, alloc);
    return (1.0 + s.gamma1) * (1.0 + s.gamma2);
}

double f1_derivative(const ScenarioConfig& cfg, const PowerAllocation& alloc) {
    const double kappa = 1.0 - alloc.ar_sq;
    if (std::abs(alloc.comm_share() - kappa) > 1e-9) {
        throw ContractError("f1_derivative: requires a1_sq + a2_sq == 1 - ar_sq");
    }
    const double p = cfg.total_power_mw;
    const double h1 = cfg.h1_gain;
    const double h2 = cfg.h2_gain;
    const double s1 = cfg.sigma1_sq;
    const double s2 = cfg.sigma2_sq;

    const double denom = h2 * (kappa - alloc.a2_sq) * p + s2;
    return -(h1 * s2 - h2 * s1) * (h2 * kappa * p + s2) * p / (denom * denom * s1);
}

}  // namespace jrc
