#pragma once

#include <array>
#include <string_view>

#include "jrc/scenario.hpp"

namespace jrc {

enum class WaveformKind { LinearFM, ParabolicFM };

std::string_view to_string(WaveformKind kind);
/// Accepts "linear" / "parabolic" (case-sensitive). Throws ValidationError.
WaveformKind parse_waveform_kind(std::string_view name);

/// FM pulse with a rectangular envelope of duration T = time_bandwidth / bandwidth_hz.
struct WaveformSpec {
    WaveformKind kind = WaveformKind::LinearFM;
    double bandwidth_hz = 0.0;
    double time_bandwidth = 0.0;

    double duration_s() const { return time_bandwidth / bandwidth_hz; }

    /// The waveform a scenario transmits: its W and TW with the given FM law.
    static WaveformSpec from_scenario(const ScenarioConfig& cfg, WaveformKind kind);
};

/// Throws ValidationError when W <= 0 or TW < 1.
void validate_waveform(const WaveformSpec& spec);

/// E with 2E = integral of |x|^2 over the pulse; T/2 for a unit envelope.
double analytic_energy(const WaveformSpec& spec);

/// The 4 pi^2 weighted second spectral moment (rad^2/s^2):
/// pi^2 W^2 / 3 for linear FM, 16 pi^2 W^2 / 45 for parabolic FM.
double analytic_rms_bandwidth_sq(const WaveformSpec& spec);

/// sigma_r^2, plus the self-interference residue when the scenario asks for it.
double radar_noise_power(const ScenarioConfig& cfg);

/// Received echo power of the radar component from target k:
/// eta_k^2 |h_k|^4 alpha_r^2 P (two-way channel).
double echo_power(const ScenarioConfig& cfg, const PowerAllocation& alloc, int k);

/// Post-integration radar SNR 2 E W / sigma_r^2 scaled by the echo power.
double radar_snr(const ScenarioConfig& cfg, const PowerAllocation& alloc,
                 const WaveformSpec& spec, int k);

/// Delay CRLB for target k (s^2):
///   sigma_r^2 / (2 eta_k^2 |h_k|^4 alpha_r^2 P E W B_rms^2).
/// Reflected communications components count as interference and do not
/// contribute Fisher information. Throws UndefinedMetricError when alpha_r^2 == 0.
double crlb_delay(const ScenarioConfig& cfg, const PowerAllocation& alloc,
                  const WaveformSpec& spec, int k);

struct CrlbReport {
    std::array<double, 2> crlb_per_target{};
    double sigma_eps_sq = 0.0;             ///< s^2
    double sigma_eps_sq_normalized = 0.0;  ///< relative to alpha_r^2 = 1, >= 1
};

CrlbReport total_estimation_variance(const ScenarioConfig& cfg, const PowerAllocation& alloc,
                                     const WaveformSpec& spec);

}  // namespace jrc
