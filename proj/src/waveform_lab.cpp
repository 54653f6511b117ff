#include "jrc/waveform_lab.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "fft.hpp"
#include "jrc/errors.hpp"
#include "jrc/format.hpp"
#include "jrc/random.hpp"

namespace jrc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// 2 pi int_0^t f(s) ds for the FM law.
double fm_phase(const WaveformSpec& spec, double t) {
    const double T = spec.duration_s();
    const double W = spec.bandwidth_hz;
    switch (spec.kind) {
        case WaveformKind::LinearFM: return kTwoPi * W * (t * t / (2.0 * T) - t / 2.0);
        case WaveformKind::ParabolicFM: return kTwoPi * W * (t * t * t / (3.0 * T * T) - t / 3.0);
    }
    return 0.0;
}

std::size_t sample_count(double sample_rate_hz, double duration_s) {
    return static_cast<std::size_t>(std::llround(sample_rate_hz * duration_s));
}

}  // namespace

double instantaneous_frequency(const WaveformSpec& spec, double t) {
    const double u = t / spec.duration_s();
    switch (spec.kind) {
        case WaveformKind::LinearFM: return spec.bandwidth_hz * (u - 0.5);
        case WaveformKind::ParabolicFM: return spec.bandwidth_hz * (u * u - 1.0 / 3.0);
    }
    return 0.0;
}

std::complex<double> evaluate_waveform(const WaveformSpec& spec, double t) {
    if (t < 0.0 || t >= spec.duration_s()) return {0.0, 0.0};
    return std::polar(1.0, fm_phase(spec, t));
}

SampledWaveform synthesize(const WaveformSpec& spec, double sample_rate_hz) {
    validate_waveform(spec);
    if (!(sample_rate_hz >= kMinOversampling * spec.bandwidth_hz)) {
        throw ContractError("synthesize: sample rate must be at least " + format_exact(kMinOversampling) +
                            " x bandwidth");
    }
    SampledWaveform w;
    w.spec = spec;
    w.sample_rate_hz = sample_rate_hz;
    w.duration_s = spec.duration_s();

    const std::size_t n = sample_count(sample_rate_hz, w.duration_s);
    w.samples.resize(n);
    w.inst_freq_hz.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = (static_cast<double>(i) + 0.5) / sample_rate_hz;
        w.samples[i] = std::polar(1.0, fm_phase(spec, t));
        w.inst_freq_hz[i] = instantaneous_frequency(spec, t);
    }
    return w;
}

double numeric_energy(const SampledWaveform& w) {
    double acc = 0.0;
    for (const auto& s : w.samples) acc += std::norm(s);
    return 0.5 * acc / w.sample_rate_hz;
}

double numeric_rms_bandwidth_sq(const SampledWaveform& w, MomentMethod method) {
    const std::size_t n = w.samples.size();
    if (n == 0) throw ContractError("numeric_rms_bandwidth_sq: empty waveform");

    if (method == MomentMethod::InstFreq) {
        const auto& f = w.inst_freq_hz;
        auto g = [&](std::size_t i) { return kTwoPi * kTwoPi * f[i] * f[i]; };
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += g(i);
        // Midpoint rule plus the h^2/24 (g'(T) - g'(0)) endpoint term, with
        // one-sided slopes that are exact for quadratic g.
        if (n >= 3) {
            const double slope_end = 2.0 * g(n - 1) - 3.0 * g(n - 2) + g(n - 3);
            const double slope_begin = -2.0 * g(0) + 3.0 * g(1) - g(2);
            acc += (slope_end - slope_begin) / 24.0;
        }
        return acc / w.sample_rate_hz / w.duration_s;
    }

    std::vector<std::complex<double>> spectrum = w.samples;
    detail::FftPlan(n, detail::FftPlan::Direction::Forward).execute(spectrum);

    const double limit = 2.0 * w.spec.bandwidth_hz;
    const double bin_hz = w.sample_rate_hz / static_cast<double>(n);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double signed_bin = k < (n + 1) / 2 ? static_cast<double>(k)
                                                  : static_cast<double>(k) - static_cast<double>(n);
        const double f = signed_bin * bin_hz;
        if (std::abs(f) > limit) continue;
        const double p = std::norm(spectrum[k]);
        num += f * f * p;
        den += p;
    }
    return kTwoPi * kTwoPi * num / den;
}

DerivativeMoment numeric_msq_derivative(const SampledWaveform& w) {
    const auto& x = w.samples;
    const std::size_t n = x.size();
    if (n < 5) throw ContractError("numeric_msq_derivative: need at least 5 samples");

    const double fs = w.sample_rate_hz;
    double acc = 0.0;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const auto d = (-x[i + 2] + 8.0 * x[i + 1] - 8.0 * x[i - 1] + x[i - 2]) * (fs / 12.0);
        acc += std::norm(d);
    }
    DerivativeMoment m;
    m.derivative_energy = acc / fs;
    m.per_unit_time = m.derivative_energy / (static_cast<double>(n - 4) / fs);
    m.msq_total = w.spec.bandwidth_hz * m.derivative_energy;
    return m;
}

void write_waveform_text(std::ostream& out, const SampledWaveform& w) {
    out << "# waveform=" << to_string(w.spec.kind) << " bandwidth_hz=" << format_exact(w.spec.bandwidth_hz)
        << " time_bandwidth=" << format_exact(w.spec.time_bandwidth)
        << " sample_rate_hz=" << format_exact(w.sample_rate_hz) << " samples=" << w.samples.size() << '\n';
    out << "# time_s re im\n";
    for (std::size_t i = 0; i < w.samples.size(); ++i) {
        const double t = (static_cast<double>(i) + 0.5) / w.sample_rate_hz;
        out << format_sci9(t) << ' ' << format_sci9(w.samples[i].real()) << ' '
            << format_sci9(w.samples[i].imag()) << '\n';
    }
}

ScenarioConfig with_radar_snr(const ScenarioConfig& cfg, const PowerAllocation& alloc,
                              const WaveformSpec& spec, int k, double snr_db) {
    ScenarioConfig out = cfg;
    out.si_residue_in_noise = false;
    out.sigma_r_sq = echo_power(cfg, alloc, k) * 2.0 * analytic_energy(spec) * spec.bandwidth_hz /
                     db_to_linear(snr_db);
    validate_scenario(out);
    return out;
}

namespace {

/// Everything a trial needs that does not change between trials.
struct McSetup {
    std::size_t pulse_len = 0;    // N
    std::size_t window_len = 0;   // L, received samples per trial
    std::size_t fft_len = 0;      // M >= L + N - 1
    std::size_t max_lag = 0;      // L - N
    std::vector<std::complex<double>> template_spectrum;  // conj(FFT(x)) / M
    std::vector<std::complex<double>> radar_echo;         // deterministic part, length L
    std::size_t support_begin = 0;  // samples carrying the delayed superposition
    std::size_t support_end = 0;
    double comm_amp1 = 0.0;  // eta h^2 sqrt(P) alpha_1
    double comm_amp2 = 0.0;
    double noise_sigma = 0.0;  // per-quadrature standard deviation
    double sample_period = 0.0;
};

double estimate_delay(const McSetup& setup, const detail::FftPlan& forward, const detail::FftPlan& inverse,
                      std::uint64_t seed, std::size_t trial, std::vector<std::complex<double>>& buf) {
    auto rng = substream(seed, trial);
    std::fill(buf.begin(), buf.end(), std::complex<double>{});

    // Noise is drawn first so that the noise realization of a trial does not
    // depend on whether interference is present.
    for (std::size_t j = 0; j < setup.window_len; ++j) {
        const auto [re, im] = normal_pair(rng);
        buf[j] = setup.radar_echo[j] + setup.noise_sigma * std::complex<double>(re, im);
    }
    if (setup.comm_amp1 > 0.0 || setup.comm_amp2 > 0.0) {
        constexpr double kHalf = std::numbers::sqrt2 / 2.0;  // unit-power circular
        for (std::size_t j = setup.support_begin; j < setup.support_end; ++j) {
            const auto [a, b] = normal_pair(rng);
            const auto [c, d] = normal_pair(rng);
            buf[j] += setup.comm_amp1 * kHalf * std::complex<double>(a, b) +
                      setup.comm_amp2 * kHalf * std::complex<double>(c, d);
        }
    }

    forward.execute(buf);
    for (std::size_t i = 0; i < setup.fft_len; ++i) buf[i] *= setup.template_spectrum[i];
    inverse.execute(buf);

    std::size_t peak = 1;
    double peak_mag = -1.0;
    for (std::size_t l = 1; l < setup.max_lag; ++l) {
        const double m = std::abs(buf[l]);
        if (m > peak_mag) {
            peak_mag = m;
            peak = l;
        }
    }
    const double ym = std::abs(buf[peak - 1]);
    const double y0 = peak_mag;
    const double yp = std::abs(buf[peak + 1]);
    const double curvature = ym - 2.0 * y0 + yp;
    const double offset = curvature < 0.0 ? 0.5 * (ym - yp) / curvature : 0.0;
    return (static_cast<double>(peak) + offset) * setup.sample_period;
}

}  // namespace

McDelayReport mc_delay_estimation(const ScenarioConfig& cfg, const PowerAllocation& alloc,
                                  const WaveformSpec& spec, int k, double true_delay_s,
                                  std::size_t trials, std::uint64_t seed, const McDelayOptions& options) {
    validate_waveform(spec);
    if (k != 1 && k != 2) throw ContractError("mc_delay_estimation: target must be 1 or 2");
    if (trials < 100) throw ContractError("mc_delay_estimation: need at least 100 trials");
    if (!(alloc.ar_sq > 0.0 && alloc.ar_sq <= 1.0) || alloc.a1_sq < 0.0 || alloc.a2_sq < 0.0 ||
        alloc.total() > 1.0 + 1e-12) {
        throw ContractError("mc_delay_estimation: allocation must have ar_sq in (0, 1] and sum <= 1");
    }
    const double T = spec.duration_s();
    const double W = spec.bandwidth_hz;
    if (!(true_delay_s >= 2.0 / W && true_delay_s <= T / 2.0)) {
        throw ContractError("mc_delay_estimation: delay must lie in [2/W, T/2]");
    }
    if (!(options.oversampling >= kMinOversampling)) {
        throw ContractError("mc_delay_estimation: oversampling must be >= 8");
    }

    McDelayReport report;
    report.trials = trials;
    report.target = k;
    report.true_delay_s = true_delay_s;
    report.seed = seed;
    report.snr_post_db = 10.0 * std::log10(radar_snr(cfg, alloc, spec, k));
    if (!(report.snr_post_db >= options.min_snr_db)) {
        throw BelowThresholdError(report.snr_post_db, options.min_snr_db);
    }
    report.crlb = crlb_delay(cfg, alloc, spec, k);

    const double fs = options.oversampling * W;
    const SampledWaveform pulse = synthesize(spec, fs);

    McSetup setup;
    setup.sample_period = 1.0 / fs;
    setup.pulse_len = pulse.samples.size();
    setup.max_lag = static_cast<std::size_t>(std::ceil(T / 2.0 * fs)) + 2;
    setup.window_len = setup.pulse_len + setup.max_lag;
    setup.fft_len = std::bit_ceil(setup.window_len + setup.pulse_len);

    const detail::FftPlan forward(setup.fft_len, detail::FftPlan::Direction::Forward);
    const detail::FftPlan inverse(setup.fft_len, detail::FftPlan::Direction::Inverse);

    setup.template_spectrum.assign(setup.fft_len, {});
    std::copy(pulse.samples.begin(), pulse.samples.end(), setup.template_spectrum.begin());
    forward.execute(setup.template_spectrum);
    const double scale = 1.0 / static_cast<double>(setup.fft_len);
    for (auto& v : setup.template_spectrum) v = std::conj(v) * scale;

    const double path = cfg.rcs(k) * cfg.channel_gain(k) * std::sqrt(cfg.total_power_mw);
    const double radar_amp = path * std::sqrt(alloc.ar_sq);
    setup.comm_amp1 = path * std::sqrt(alloc.a1_sq);
    setup.comm_amp2 = path * std::sqrt(alloc.a2_sq);
    setup.noise_sigma = std::sqrt(radar_noise_power(cfg) * fs / W);

    setup.radar_echo.resize(setup.window_len);
    setup.support_begin = setup.window_len;
    setup.support_end = 0;
    for (std::size_t j = 0; j < setup.window_len; ++j) {
        const double t = (static_cast<double>(j) + 0.5) / fs - true_delay_s;
        setup.radar_echo[j] = radar_amp * evaluate_waveform(spec, t);
        if (t >= 0.0 && t < T) {
            setup.support_begin = std::min(setup.support_begin, j);
            setup.support_end = j + 1;
        }
    }

    std::vector<double> estimates(trials);
    const unsigned workers = std::clamp<unsigned>(options.threads, 1u, static_cast<unsigned>(trials));
    auto run_range = [&](std::size_t begin, std::size_t end) {
        std::vector<std::complex<double>> buf(setup.fft_len);
        for (std::size_t t = begin; t < end; ++t) {
            estimates[t] = estimate_delay(setup, forward, inverse, seed, t, buf);
        }
    };
    if (workers == 1) {
        run_range(0, trials);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (trials + workers - 1) / workers;
        for (std::size_t begin = 0; begin < trials; begin += chunk) {
            pool.emplace_back(run_range, begin, std::min(trials, begin + chunk));
        }
    }

    // Reduce in trial order so the result is independent of the thread count.
    double sum = 0.0;
    for (const double e : estimates) sum += e;
    const double mean = sum / static_cast<double>(trials);
    double ss = 0.0;
    double se = 0.0;
    for (const double e : estimates) {
        ss += (e - mean) * (e - mean);
        se += (e - true_delay_s) * (e - true_delay_s);
    }
    report.mean_estimate_s = mean;
    report.bias_s = mean - true_delay_s;
    report.empirical_var = ss / static_cast<double>(trials - 1);
    report.mean_sq_error = se / static_cast<double>(trials);
    report.efficiency = report.empirical_var / report.crlb;
    return report;
}

}  // namespace jrc
