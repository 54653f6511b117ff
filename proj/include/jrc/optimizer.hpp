#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jrc/comms_model.hpp"
#include "jrc/radar_model.hpp"
#include "jrc/scenario.hpp"

namespace jrc {

/// One sample on a rate / estimation-error curve.
struct TradeoffPoint {
    PowerAllocation alloc;
    double r1 = 0.0;
    double r2 = 0.0;
    double r_sum = 0.0;
    double sigma_eps_sq = 0.0;             ///< +inf when alloc.ar_sq == 0
    double sigma_eps_sq_normalized = 0.0;  ///< +inf when alloc.ar_sq == 0
    double fairness = 0.0;                 ///< NaN when both rates are zero
};

/// Evaluates both sides of the system at a fixed allocation.
TradeoffPoint evaluate_point(const ScenarioConfig& cfg, const PowerAllocation& alloc,
                             const WaveformSpec& spec);

/// Smallest communications share kappa = a1_sq + a2_sq for which R2 >= r02
/// is reachable: sigma2^2 (2^r02 - 1) / (|h2|^2 P).
double kappa_min(const ScenarioConfig& cfg, double r02);

/// Sum-rate maximizing split for a fixed radar share: all communications
/// power beyond what pins R2 to r02 goes to the strong user.
/// Throws InfeasibleError (carrying kappa_min) when 1 - ar_sq < kappa_min.
PowerAllocation optimal_allocation_for_sumrate(const ScenarioConfig& cfg, double r02, double ar_sq);

struct MinPower {
    double a1_sq_min = 0.0;
    double a2_sq_min = 0.0;
};

/// Per-user power floors that meet both QoS targets with equality.
/// Throws InfeasibleError when they leave no power for the radar.
MinPower min_power_for_qos(const ScenarioConfig& cfg, const QosRequirement& qos);

/// (a1_sq_min, a2_sq_min, 1 - a1_sq_min - a2_sq_min).
PowerAllocation max_radar_allocation(const ScenarioConfig& cfg, const QosRequirement& qos);

/// Minimum total estimation variance under both QoS constraints.
TradeoffPoint star_point(const ScenarioConfig& cfg, const QosRequirement& qos, const WaveformSpec& spec);

struct SweepResult {
    WaveformSpec spec;
    QosRequirement qos;  ///< r01 unused (0)
    std::vector<TradeoffPoint> points;  ///< ascending ar_sq, feasible only
    /// 1 - kappa_min when part of the grid fell beyond it.
    std::optional<double> infeasible_tail_start;
    double kappa_min = 0.0;
};

/// n uniform points on [lo, hi] (just {lo} when n == 1).
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);
/// 200 points on [0.01, 0.99].
std::vector<double> default_grid();

/// Sum-rate optimal curve for weak-user QoS r02, parameterized by ar_sq.
/// Grid values must be strictly increasing in [0, 1). Throws InfeasibleError
/// when no grid value is feasible.
SweepResult tradeoff_sweep(const ScenarioConfig& cfg, double r02, const WaveformSpec& spec,
                           std::span<const double> grid);

/// Uniform samples over {a1+a2+ar <= 1, all >= 0, a2 > a1}. Deterministic in seed.
std::vector<TradeoffPoint> sample_feasible_region(const ScenarioConfig& cfg, const WaveformSpec& spec,
                                                  std::size_t n, std::uint64_t seed);

struct AsymmetryCase {
    double gap_db = 0.0;
    ScenarioConfig cfg;  ///< h1 as given, h2 = h1 * 10^(-gap/10)
    SweepResult sweep;
};

/// Re-runs tradeoff_sweep with the weak user's gain placed gap_db below the
/// strong user's. |h1|^2 is held fixed.
std::vector<AsymmetryCase> asymmetry_sweep(const ScenarioConfig& cfg, double r02, const WaveformSpec& spec,
                                           std::span<const double> gaps_db, std::span<const double> grid);

}  // namespace jrc
