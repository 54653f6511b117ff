#include "jrc/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "jrc/errors.hpp"
#include "jrc/random.hpp"

namespace jrc {

TradeoffPoint evaluate_point(const ScenarioConfig& cfg, const PowerAllocation& alloc,
                             const WaveformSpec& spec) {
    TradeoffPoint pt;
    pt.alloc = alloc;
    const RateReport rates = rate_report(cfg, alloc);
    pt.r1 = rates.r1;
    pt.r2 = rates.r2;
    pt.r_sum = rates.r_sum;

    if (alloc.ar_sq > 0.0) {
        const CrlbReport crlb = total_estimation_variance(cfg, alloc, spec);
        pt.sigma_eps_sq = crlb.sigma_eps_sq;
        pt.sigma_eps_sq_normalized = crlb.sigma_eps_sq_normalized;
    } else {
        pt.sigma_eps_sq = std::numeric_limits<double>::infinity();
        pt.sigma_eps_sq_normalized = std::numeric_limits<double>::infinity();
    }

    if (pt.r1 > 0.0 || pt.r2 > 0.0) {
        const std::array<double, 2> r{pt.r1, pt.r2};
        pt.fairness = jain_fairness(r);
    } else {
        pt.fairness = std::numeric_limits<double>::quiet_NaN();
    }
    return pt;
}

double kappa_min(const ScenarioConfig& cfg, double r02) {
    const double noise2 = cfg.sigma2_sq / cfg.total_power_mw;
    return noise2 * (std::exp2(r02) - 1.0) / cfg.h2_gain;
}

namespace {

double step_ulps(double x, int n) {
    for (; n > 0; --n) x = std::nextafter(x, 2.0);
    for (; n < 0; ++n) x = std::nextafter(x, -1.0);
    return x;
}

// The complement kappa - a1 can miss kappa by an ulp after rounding (ties to
// even can make single-component steps skip over it). Picks the closest pair
// within a few ulps of both shares whose floating-point sum is kappa.
void snap_sum(PowerAllocation& alloc, double kappa) {
    constexpr int kReach = 3;
    for (int radius = 1; radius <= 2 * kReach; ++radius) {
        for (int d1 = -kReach; d1 <= kReach; ++d1) {
            const int d2_abs = radius - std::abs(d1);
            if (d2_abs < 0 || d2_abs > kReach) continue;
            for (const int d2 : {-d2_abs, d2_abs}) {
                const double a1 = step_ulps(alloc.a1_sq, d1);
                const double a2 = step_ulps(alloc.a2_sq, d2);
                if (a1 >= 0.0 && a2 >= 0.0 && a1 + a2 == kappa) {
                    alloc.a1_sq = a1;
                    alloc.a2_sq = a2;
                    return;
                }
            }
        }
    }
}

}  // namespace

PowerAllocation optimal_allocation_for_sumrate(const ScenarioConfig& cfg, double r02, double ar_sq) {
    if (!(ar_sq >= 0.0 && ar_sq < 1.0)) {
        throw ContractError("optimal_allocation_for_sumrate: ar_sq must lie in [0, 1)");
    }
    if (!(r02 > 0.0) || !std::isfinite(r02)) {
        throw ContractError("optimal_allocation_for_sumrate: r02 must be positive");
    }
    const double kappa = 1.0 - ar_sq;
    const double kmin = kappa_min(cfg, r02);
    if (kappa < kmin) {
        throw InfeasibleError("R2 >= " + std::to_string(r02) + " needs a communications share of at least " +
                                  std::to_string(kmin) + " but only " + std::to_string(kappa) + " is left",
                              kmin);
    }

    const double h2 = cfg.h2_gain;
    const double noise2 = cfg.sigma2_sq / cfg.total_power_mw;
    const double level = std::exp2(r02);

    PowerAllocation alloc;
    alloc.ar_sq = ar_sq;
    alloc.a1_sq = std::max(0.0, (kappa * h2 - noise2 * (level - 1.0)) / (h2 * level));
    alloc.a2_sq = kappa - alloc.a1_sq;
    if (alloc.a1_sq + alloc.a2_sq != kappa) snap_sum(alloc, kappa);
    return alloc;
}

MinPower min_power_for_qos(const ScenarioConfig& cfg, const QosRequirement& qos) {
    if (!(qos.r01 >= 0.0) || !(qos.r02 >= 0.0) || !std::isfinite(qos.r01) || !std::isfinite(qos.r02)) {
        throw ValidationError("qos", "rates must be finite and non-negative");
    }
    const double noise1 = cfg.sigma1_sq / cfg.total_power_mw;
    const double noise2 = cfg.sigma2_sq / cfg.total_power_mw;
    const double g1 = std::exp2(qos.r01) - 1.0;
    const double g2 = std::exp2(qos.r02) - 1.0;

    MinPower m;
    m.a1_sq_min = g1 * noise1 / cfg.h1_gain;
    m.a2_sq_min = g2 * (m.a1_sq_min + noise2 / cfg.h2_gain);
    if (m.a1_sq_min + m.a2_sq_min >= 1.0) {
        throw InfeasibleError("QoS (" + std::to_string(qos.r01) + ", " + std::to_string(qos.r02) +
                                  ") needs communications power " +
                                  std::to_string(m.a1_sq_min + m.a2_sq_min) + " >= 1",
                              m.a1_sq_min + m.a2_sq_min);
    }
    return m;
}

PowerAllocation max_radar_allocation(const ScenarioConfig& cfg, const QosRequirement& qos) {
    const MinPower m = min_power_for_qos(cfg, qos);
    return PowerAllocation{m.a1_sq_min, m.a2_sq_min, 1.0 - m.a1_sq_min - m.a2_sq_min};
}

TradeoffPoint star_point(const ScenarioConfig& cfg, const QosRequirement& qos, const WaveformSpec& spec) {
    return evaluate_point(cfg, max_radar_allocation(cfg, qos), spec);
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
    if (n == 0) throw ContractError("uniform_grid: n must be >= 1");
    if (n == 1) return {lo};
    std::vector<double> grid(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = lo + step * static_cast<double>(i);
    }
    grid.back() = hi;
    return grid;
}

std::vector<double> default_grid() { return uniform_grid(0.01, 0.99, 200); }

SweepResult tradeoff_sweep(const ScenarioConfig& cfg, double r02, const WaveformSpec& spec,
                           std::span<const double> grid) {
    if (grid.empty()) throw ContractError("tradeoff_sweep: empty grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0 && grid[i] < 1.0)) {
            throw ContractError("tradeoff_sweep: grid values must lie in [0, 1)");
        }
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw ContractError("tradeoff_sweep: grid must be strictly increasing");
        }
    }

    SweepResult result;
    result.spec = spec;
    result.qos = QosRequirement{0.0, r02};
    result.kappa_min = kappa_min(cfg, r02);
    const double threshold = 1.0 - result.kappa_min;

    for (const double ar_sq : grid) {
        if (1.0 - ar_sq < result.kappa_min) {
            // feasibility is monotone in ar_sq, so everything past here fails too
            result.infeasible_tail_start = threshold;
            break;
        }
        result.points.push_back(evaluate_point(cfg, optimal_allocation_for_sumrate(cfg, r02, ar_sq), spec));
    }
    if (result.points.empty()) {
        throw InfeasibleError("no grid point satisfies R2 >= " + std::to_string(r02) +
                                  " (kappa_min = " + std::to_string(result.kappa_min) + ")",
                              result.kappa_min);
    }
    return result;
}

std::vector<TradeoffPoint> sample_feasible_region(const ScenarioConfig& cfg, const WaveformSpec& spec,
                                                  std::size_t n, std::uint64_t seed) {
    if (n == 0) throw ContractError("sample_feasible_region: n must be >= 1");
    auto rng = substream(seed, 0);
    std::vector<TradeoffPoint> out;
    out.reserve(n);
    while (out.size() < n) {
        // Spacings of three sorted uniforms are uniform on {a1 + a2 + ar <= 1}.
        std::array<double, 3> u{uniform01(rng), uniform01(rng), uniform01(rng)};
        std::sort(u.begin(), u.end());
        const PowerAllocation alloc{u[0], u[1] - u[0], u[2] - u[1]};
        if (!(alloc.a2_sq > alloc.a1_sq)) continue;
        out.push_back(evaluate_point(cfg, alloc, spec));
    }
    return out;
}

std::vector<AsymmetryCase> asymmetry_sweep(const ScenarioConfig& cfg, double r02, const WaveformSpec& spec,
                                           std::span<const double> gaps_db, std::span<const double> grid) {
    std::vector<AsymmetryCase> out;
    out.reserve(gaps_db.size());
    for (const double gap : gaps_db) {
        if (!(gap > 0.0) || !std::isfinite(gap)) {
            throw ValidationError("gaps_db", "channel gap must be > 0 dB so that |h1|^2 > |h2|^2");
        }
        AsymmetryCase c;
        c.gap_db = gap;
        c.cfg = cfg;
        c.cfg.h2_gain = cfg.h1_gain * db_to_linear(-gap);
        validate_scenario(c.cfg);
        c.sweep = tradeoff_sweep(c.cfg, r02, spec, grid);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace jrc
