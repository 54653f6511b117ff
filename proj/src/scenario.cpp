#include "jrc/scenario.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "jrc/errors.hpp"

namespace jrc {

BelowThresholdError::BelowThresholdError(double snr_db, double required_db)
    : std::domain_error("post-integration SNR " + std::to_string(snr_db) + " dB is below the " +
                        std::to_string(required_db) + " dB asymptotic-region guard"),
      snr_db_(snr_db) {}

double db_to_linear(double value_db) {
    if (!std::isfinite(value_db)) {
        throw ValidationError("value_db", "dB value must be finite");
    }
    return std::pow(10.0, value_db / 10.0);
}

double linear_to_db(double ratio) {
    if (!(ratio > 0.0) || !std::isfinite(ratio)) {
        throw ValidationError("ratio", "linear value must be positive and finite");
    }
    return 10.0 * std::log10(ratio);
}

double ScenarioConfig::channel_gain(int k) const {
    if (k == 1) return h1_gain;
    if (k == 2) return h2_gain;
    throw ContractError("target index must be 1 or 2");
}

double ScenarioConfig::rcs(int k) const {
    if (k == 1) return eta1;
    if (k == 2) return eta2;
    throw ContractError("target index must be 1 or 2");
}

ScenarioConfig default_scenario() {
    ScenarioConfig cfg;
    cfg.h1_gain = db_to_linear(-90.0);
    cfg.h2_gain = db_to_linear(-100.0);
    cfg.sigma1_sq = dbm_to_mw(-105.0);
    cfg.sigma2_sq = dbm_to_mw(-105.0);
    cfg.sigma_r_sq = dbm_to_mw(-110.0);
    cfg.eta1 = 0.1;
    cfg.eta2 = 0.5;
    cfg.bandwidth_hz = 20e6;
    cfg.time_bandwidth = 1000.0;
    cfg.total_power_mw = 1.0;
    cfg.si_suppression_db = 110.0;
    cfg.si_residue_in_noise = false;
    return cfg;
}

namespace {

void require_positive(double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ValidationError(field, "must be positive and finite");
    }
}

}  // namespace

std::vector<std::string> validate_scenario(const ScenarioConfig& cfg) {
    require_positive(cfg.h1_gain, "h1_gain");
    require_positive(cfg.h2_gain, "h2_gain");
    if (!(cfg.h1_gain > cfg.h2_gain)) {
        throw ValidationError("h1_gain", "user 1 must be the stronger user (h1_gain > h2_gain)");
    }
    require_positive(cfg.sigma1_sq, "sigma1_sq");
    require_positive(cfg.sigma2_sq, "sigma2_sq");
    require_positive(cfg.sigma_r_sq, "sigma_r_sq");
    require_positive(cfg.eta1, "eta1");
    require_positive(cfg.eta2, "eta2");
    require_positive(cfg.bandwidth_hz, "bandwidth_hz");
    require_positive(cfg.total_power_mw, "total_power_mw");
    if (!(cfg.time_bandwidth >= 1.0) || !std::isfinite(cfg.time_bandwidth)) {
        throw ValidationError("time_bandwidth", "must be >= 1");
    }
    if (!std::isfinite(cfg.si_suppression_db)) {
        throw ValidationError("si_suppression_db", "must be finite");
    }

    std::vector<std::string> warnings;
    if (cfg.sigma1_sq > cfg.sigma2_sq) {
        warnings.emplace_back(
            "sigma1_sq > sigma2_sq: the sum-rate monotonicity argument assumes sigma1_sq <= sigma2_sq");
    }
    return warnings;
}

namespace {

enum class Unit { Linear, Decibel, Flag };

struct KeySpec {
    std::string_view key;
    std::string_view field;  // canonical field; dB and linear spellings share one
    Unit unit;
    double ScenarioConfig::*member;
};

constexpr std::array<KeySpec, 18> kKeys{{
    {"h1_gain", "h1_gain", Unit::Linear, &ScenarioConfig::h1_gain},
    {"h1_gain_db", "h1_gain", Unit::Decibel, &ScenarioConfig::h1_gain},
    {"h2_gain", "h2_gain", Unit::Linear, &ScenarioConfig::h2_gain},
    {"h2_gain_db", "h2_gain", Unit::Decibel, &ScenarioConfig::h2_gain},
    {"sigma1_sq", "sigma1_sq", Unit::Linear, &ScenarioConfig::sigma1_sq},
    {"sigma1_sq_dbm", "sigma1_sq", Unit::Decibel, &ScenarioConfig::sigma1_sq},
    {"sigma2_sq", "sigma2_sq", Unit::Linear, &ScenarioConfig::sigma2_sq},
    {"sigma2_sq_dbm", "sigma2_sq", Unit::Decibel, &ScenarioConfig::sigma2_sq},
    {"sigma_r_sq", "sigma_r_sq", Unit::Linear, &ScenarioConfig::sigma_r_sq},
    {"sigma_r_sq_dbm", "sigma_r_sq", Unit::Decibel, &ScenarioConfig::sigma_r_sq},
    {"eta1", "eta1", Unit::Linear, &ScenarioConfig::eta1},
    {"eta2", "eta2", Unit::Linear, &ScenarioConfig::eta2},
    {"bandwidth_hz", "bandwidth_hz", Unit::Linear, &ScenarioConfig::bandwidth_hz},
    {"time_bandwidth", "time_bandwidth", Unit::Linear, &ScenarioConfig::time_bandwidth},
    {"total_power_mw", "total_power_mw", Unit::Linear, &ScenarioConfig::total_power_mw},
    {"total_power_dbm", "total_power_mw", Unit::Decibel, &ScenarioConfig::total_power_mw},
    {"si_suppression_db", "si_suppression_db", Unit::Linear, &ScenarioConfig::si_suppression_db},
    {"si_residue_in_noise", "si_residue_in_noise", Unit::Flag, nullptr},
}};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, std::size_t line, std::string_view key) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = text.data() + text.size();
    if (!text.empty() && *begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw ParseError(line, "value for '" + std::string(key) + "' is not a number: '" +
                                   std::string(text) + "'");
    }
    return value;
}

bool parse_flag(std::string_view text, std::size_t line) {
    if (text == "true" || text == "1") return true;
    if (text == "false" || text == "0") return false;
    throw ParseError(line, "si_residue_in_noise expects true/false, got '" + std::string(text) + "'");
}

}  // namespace

ScenarioConfig load_scenario(std::string_view source) {
    ScenarioConfig cfg = default_scenario();
    // canonical field -> line where it was first set
    std::map<std::string_view, std::size_t> seen;

    std::size_t line_no = 0;
    while (!source.empty()) {
        ++line_no;
        const auto nl = source.find('\n');
        std::string_view line = source.substr(0, nl);
        source = nl == std::string_view::npos ? std::string_view{} : source.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(line_no, "expected key=value, got '" + std::string(line) + "'");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));

        const KeySpec* spec = nullptr;
        for (const auto& k : kKeys) {
            if (k.key == key) spec = &k;
        }
        if (spec == nullptr) {
            throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
        }
        if (const auto it = seen.find(spec->field); it != seen.end()) {
            throw ParseError(line_no, "'" + std::string(spec->field) + "' already set on line " +
                                          std::to_string(it->second) +
                                          " (dB and linear forms are mutually exclusive)");
        }
        seen.emplace(spec->field, line_no);

        switch (spec->unit) {
            case Unit::Flag:
                cfg.si_residue_in_noise = parse_flag(value, line_no);
                break;
            case Unit::Linear:
                cfg.*(spec->member) = parse_number(value, line_no, key);
                break;
            case Unit::Decibel: {
                const double db = parse_number(value, line_no, key);
                if (!std::isfinite(db)) {
                    throw ParseError(line_no, "dB value for '" + std::string(key) + "' must be finite");
                }
                cfg.*(spec->member) = db_to_linear(db);
                break;
            }
        }
    }

    validate_scenario(cfg);
    return cfg;
}

ScenarioConfig load_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("scenario", "cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_scenario(buf.str());
}

namespace {

std::string exact(double v) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return std::string(buf.data(), ptr);
}

}  // namespace

std::string to_scenario_text(const ScenarioConfig& cfg) {
    std::string out;
    for (const auto& k : kKeys) {
        if (k.unit == Unit::Decibel) continue;
        out += k.key;
        out += '=';
        if (k.unit == Unit::Flag) {
            out += cfg.si_residue_in_noise ? "true" : "false";
        } else {
            out += exact(cfg.*(k.member));
        }
        out += '\n';
    }
    return out;
}

AllocationCheck validate_allocation(const ScenarioConfig& /*cfg*/, const PowerAllocation& alloc) {
    AllocationCheck check;
    const std::array<std::pair<const char*, double>, 3> parts{
        {{"a1_sq", alloc.a1_sq}, {"a2_sq", alloc.a2_sq}, {"ar_sq", alloc.ar_sq}}};
    for (const auto& [name, v] : parts) {
        if (!(v >= 0.0 && v < 1.0)) {
            check.violations.push_back(std::string(name) + " = " + exact(v) + " outside [0, 1)");
        }
    }
    // Closed-form allocations land on sum == 1 only up to rounding.
    constexpr double kSumSlack = 1e-12;
    const double sum = alloc.total();
    if (!(sum <= 1.0 + kSumSlack)) {
        check.violations.push_back("power sum " + exact(sum) + " > 1");
    }
    if (alloc.a2_sq <= alloc.a1_sq) {
        check.warnings.emplace_back("a2_sq <= a1_sq: SIC decoding order broken (weak user needs the larger share)");
    }
    return check;
}

}  // namespace jrc
