#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include "jrc/radar_model.hpp"
#include "jrc/scenario.hpp"

namespace jrc {

inline constexpr double kMinOversampling = 8.0;

/// Instantaneous frequency of the FM law at t in [0, T]:
///   linear    f(t) = W (t/T - 1/2)
///   parabolic f(t) = W ((t/T)^2 - 1/3)
/// Both have zero mean over the pulse.
double instantaneous_frequency(const WaveformSpec& spec, double t);

/// Unit-envelope pulse x(t) = exp(j 2 pi int_0^t f), zero outside [0, T).
std::complex<double> evaluate_waveform(const WaveformSpec& spec, double t);

/// Discretized pulse. Sample i sits at t_i = (i + 1/2) / sample_rate_hz.
struct SampledWaveform {
    std::vector<std::complex<double>> samples;
    std::vector<double> inst_freq_hz;  ///< FM law at the sample instants
    double sample_rate_hz = 0.0;
    double duration_s = 0.0;
    WaveformSpec spec;
};

/// Requires sample_rate_hz >= kMinOversampling * W (ContractError otherwise).
SampledWaveform synthesize(const WaveformSpec& spec, double sample_rate_hz);

/// E with 2E = sum |x_i|^2 / fs.
double numeric_energy(const SampledWaveform& w);

enum class MomentMethod {
    InstFreq,  ///< (1/T) int (2 pi f(t))^2 dt, midpoint rule on the sampled law
    Spectrum,  ///< 4 pi^2 sum f^2 |X|^2 / sum |X|^2 over the DFT, |f| <= 2W
};

/// B_rms^2 estimated from the samples. The rectangular envelope makes the
/// untruncated spectral moment diverge, so Spectrum is an approximation
/// whose error shrinks as TW grows; InstFreq is the reference.
double numeric_rms_bandwidth_sq(const SampledWaveform& w, MomentMethod method);

struct DerivativeMoment {
    double derivative_energy = 0.0;  ///< int |x'|^2 dt over the interior samples
    double per_unit_time = 0.0;      ///< derivative_energy / interior duration
    double msq_total = 0.0;          ///< W * int |x'|^2 dt, comparable to 2 E W B_rms^2
};

/// Fourth-order central difference of the samples; two samples at each edge
/// are skipped so the envelope discontinuity does not enter.
DerivativeMoment numeric_msq_derivative(const SampledWaveform& w);

/// Three columns "time_s re im" with a leading `#` header carrying the spec
/// and sample rate. Numbers use 9 significant digits.
void write_waveform_text(std::ostream& out, const SampledWaveform& w);

struct McDelayOptions {
    double oversampling = kMinOversampling;
    double min_snr_db = 10.0;
    unsigned threads = 1;  ///< results do not depend on this
};

struct McDelayReport {
    std::size_t trials = 0;
    int target = 1;
    double true_delay_s = 0.0;
    double snr_post_db = 0.0;
    double mean_estimate_s = 0.0;
    double bias_s = 0.0;
    double empirical_var = 0.0;  ///< sample variance of the estimates, s^2
    double mean_sq_error = 0.0;  ///< about the true delay, s^2
    double crlb = 0.0;
    double efficiency = 0.0;     ///< empirical_var / crlb
    std::uint64_t seed = 0;
};

/// Matched-filter delay estimation against the closed-form CRLB.
///
/// Each trial receives eta_k |h_k|^2 sqrt(P) (a1 s1 + a2 s2 + ar x(t - tau)) + n_r,
/// with s1, s2 i.i.d. unit-power circular Gaussian per sample over the echo
/// support and n_r white with variance sigma_r^2 * fs / W in each quadrature.
/// The estimate is the peak of |z (*) x| refined by a three-point parabola.
///
/// Preconditions: trials >= 100, 2/W <= tau <= T/2, ar_sq > 0, post-integration
/// SNR >= options.min_snr_db (BelowThresholdError otherwise).
McDelayReport mc_delay_estimation(const ScenarioConfig& cfg, const PowerAllocation& alloc,
                                  const WaveformSpec& spec, int k, double true_delay_s,
                                  std::size_t trials, std::uint64_t seed,
                                  const McDelayOptions& options = {});

/// Copy of cfg with sigma_r^2 chosen so that target k sees the requested
/// post-integration SNR under alloc. Used to move Monte Carlo runs into the
/// asymptotic region.
ScenarioConfig with_radar_snr(const ScenarioConfig& cfg, const PowerAllocation& alloc,
                              const WaveformSpec& spec, int k, double snr_db);

}  // namespace jrc
