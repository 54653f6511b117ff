#include "jrc/radar_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "jrc/errors.hpp"

namespace jrc {

std::string_view to_string(WaveformKind kind) {
    switch (kind) {
        case WaveformKind::LinearFM: return "linear";
        case WaveformKind::ParabolicFM: return "parabolic";
    }
    return "unknown";
}

WaveformKind parse_waveform_kind(std::string_view name) {
    if (name == "linear") return WaveformKind::LinearFM;
    if (name == "parabolic") return WaveformKind::ParabolicFM;
    throw ValidationError("waveform", "expected 'linear' or 'parabolic', got '" + std::string(name) + "'");
}

WaveformSpec WaveformSpec::from_scenario(const ScenarioConfig& cfg, WaveformKind kind) {
    return WaveformSpec{kind, cfg.bandwidth_hz, cfg.time_bandwidth};
}

void validate_waveform(const WaveformSpec& spec) {
    if (!(spec.bandwidth_hz > 0.0) || !std::isfinite(spec.bandwidth_hz)) {
        throw ValidationError("bandwidth_hz", "must be positive and finite");
    }
    if (!(spec.time_bandwidth >= 1.0) || !std::isfinite(spec.time_bandwidth)) {
        throw ValidationError("time_bandwidth", "must be >= 1");
    }
}

double analytic_energy(const WaveformSpec& spec) {
    validate_waveform(spec);
    return spec.duration_s() / 2.0;
}

double analytic_rms_bandwidth_sq(const WaveformSpec& spec) {
    validate_waveform(spec);
    constexpr double pi_sq = std::numbers::pi * std::numbers::pi;
    const double w_sq = spec.bandwidth_hz * spec.bandwidth_hz;
    switch (spec.kind) {
        case WaveformKind::LinearFM: return pi_sq * w_sq / 3.0;
        case WaveformKind::ParabolicFM: return 16.0 * pi_sq * w_sq / 45.0;
    }
    throw ContractError("analytic_rms_bandwidth_sq: unknown waveform kind");
}

double radar_noise_power(const ScenarioConfig& cfg) {
    double noise = cfg.sigma_r_sq;
    if (cfg.si_residue_in_noise) {
        noise += cfg.total_power_mw * db_to_linear(-cfg.si_suppression_db);
    }
    return noise;
}

double echo_power(const ScenarioConfig& cfg, const PowerAllocation& alloc, int k) {
    const double eta = cfg.rcs(k);
    const double h = cfg.channel_gain(k);
    return eta * eta * h * h * alloc.ar_sq * cfg.total_power_mw;
}

double radar_snr(const ScenarioConfig& cfg, const PowerAllocation& alloc,
                 const WaveformSpec& spec, int k) {
    const double two_e = 2.0 * analytic_energy(spec);
    return echo_power(cfg, alloc, k) * two_e * spec.bandwidth_hz / radar_noise_power(cfg);
}

double crlb_delay(const ScenarioConfig& cfg, const PowerAllocation& alloc,
                  const WaveformSpec& spec, int k) {
    if (!(alloc.ar_sq > 0.0)) {
        throw UndefinedMetricError("crlb_delay: zero radar power gives zero Fisher information");
    }
    const double energy = analytic_energy(spec);
    const double brms_sq = analytic_rms_bandwidth_sq(spec);
    const double fisher = 2.0 * echo_power(cfg, alloc, k) * energy * spec.bandwidth_hz * brms_sq /
                          radar_noise_power(cfg);
    return 1.0 / fisher;
}

CrlbReport total_estimation_variance(const ScenarioConfig& cfg, const PowerAllocation& alloc,
                                     const WaveformSpec& spec) {
    CrlbReport report;
    report.crlb_per_target = {crlb_delay(cfg, alloc, spec, 1), crlb_delay(cfg, alloc, spec, 2)};
    report.sigma_eps_sq = report.crlb_per_target[0] + report.crlb_per_target[1];

    // The normalization baseline puts all power on the radar waveform.
    const PowerAllocation radar_only{0.0, 0.0, 1.0};
    const double baseline = crlb_delay(cfg, radar_only, spec, 1) + crlb_delay(cfg, radar_only, spec, 2);
    report.sigma_eps_sq_normalized = report.sigma_eps_sq / baseline;
    return report;
}

}  // namespace jrc
