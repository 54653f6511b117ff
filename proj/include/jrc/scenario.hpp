#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace jrc {

double db_to_linear(double value_db);
double linear_to_db(double ratio);
inline double dbm_to_mw(double value_dbm) { return db_to_linear(value_dbm); }
inline double mw_to_dbm(double value_mw) { return linear_to_db(value_mw); }

/// Physical world of one experiment: two users that are both downlink
/// receivers and radar targets of a single dual-function station.
/// All powers in mW, gains linear.
struct ScenarioConfig {
    double h1_gain = 0.0;            ///< |h1|^2, strong user
    double h2_gain = 0.0;            ///< |h2|^2, weak user
    double sigma1_sq = 0.0;          ///< noise at user 1, mW
    double sigma2_sq = 0.0;          ///< noise at user 2, mW
    double sigma_r_sq = 0.0;         ///< noise at the radar receiver, mW
    double eta1 = 0.0;               ///< RCS of user 1, m^2
    double eta2 = 0.0;               ///< RCS of user 2, m^2
    double bandwidth_hz = 0.0;
    double time_bandwidth = 0.0;
    double total_power_mw = 0.0;
    double si_suppression_db = 0.0;  ///< metadata unless si_residue_in_noise
    /// Adds the self-interference residue P*10^(-si_suppression_db/10)
    /// to the radar noise. Off by default.
    bool si_residue_in_noise = false;

    double duration_s() const { return time_bandwidth / bandwidth_hz; }
    /// |h_k|^2 for k in {1, 2}.
    double channel_gain(int k) const;
    /// eta_k for k in {1, 2}.
    double rcs(int k) const;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// The simulation parameters used throughout the study:
/// -90/-100 dB gains, -105 dBm user noise, -110 dBm radar noise,
/// 110 dB SI suppression, RCS 0.1/0.5 m^2, W = 20 MHz, TW = 1000, 0 dBm.
ScenarioConfig default_scenario();

/// Throws ValidationError naming the first offending field.
/// Returns soft warnings (e.g. sigma1^2 > sigma2^2).
std::vector<std::string> validate_scenario(const ScenarioConfig& cfg);

/// Parses `key=value` lines (with `#` comments). Missing keys keep the
/// defaults; dB/dBm keys are converted. Throws ParseError or ValidationError.
ScenarioConfig load_scenario(std::string_view source);
ScenarioConfig load_scenario_file(const std::filesystem::path& path);

/// Renders a config back into the `key=value` format using linear keys at
/// full precision, so load_scenario(to_scenario_text(c)) == c.
std::string to_scenario_text(const ScenarioConfig& cfg);

/// Power fractions (alpha_1^2, alpha_2^2, alpha_r^2) of unit transmit power.
struct PowerAllocation {
    double a1_sq = 0.0;
    double a2_sq = 0.0;
    double ar_sq = 0.0;

    double comm_share() const { return a1_sq + a2_sq; }
    double total() const { return a1_sq + a2_sq + ar_sq; }

    friend bool operator==(const PowerAllocation&, const PowerAllocation&) = default;
};

/// Minimum spectral efficiencies, bits/s/Hz.
struct QosRequirement {
    double r01 = 0.0;
    double r02 = 0.0;
};

struct AllocationCheck {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;

    bool ok() const { return violations.empty(); }
};

AllocationCheck validate_allocation(const ScenarioConfig& cfg, const PowerAllocation& alloc);

}  // namespace jrc
