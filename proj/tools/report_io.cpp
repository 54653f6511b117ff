#include "report_io.hpp"

#include <cmath>
#include <cstdio>

#include "jrc/format.hpp"

namespace jrc::cli {

CsvWriter::CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvWriter::add_row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

std::string CsvWriter::str() const {
    std::string out;
    auto emit = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    emit(header_);
    for (const auto& row : rows_) emit(row);
    return out;
}

std::string format_sig6(double value) {
    if (!std::isfinite(value)) return format_sci9(value);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

json scenario_to_json(const ScenarioConfig& cfg) {
    return json{
        {"h1_gain", cfg.h1_gain},
        {"h2_gain", cfg.h2_gain},
        {"sigma1_sq", cfg.sigma1_sq},
        {"sigma2_sq", cfg.sigma2_sq},
        {"sigma_r_sq", cfg.sigma_r_sq},
        {"eta1", cfg.eta1},
        {"eta2", cfg.eta2},
        {"bandwidth_hz", cfg.bandwidth_hz},
        {"time_bandwidth", cfg.time_bandwidth},
        {"total_power_mw", cfg.total_power_mw},
        {"si_suppression_db", cfg.si_suppression_db},
        {"si_residue_in_noise", cfg.si_residue_in_noise},
    };
}

ScenarioConfig scenario_from_json(const json& j) {
    ScenarioConfig cfg;
    cfg.h1_gain = j.at("h1_gain").get<double>();
    cfg.h2_gain = j.at("h2_gain").get<double>();
    cfg.sigma1_sq = j.at("sigma1_sq").get<double>();
    cfg.sigma2_sq = j.at("sigma2_sq").get<double>();
    cfg.sigma_r_sq = j.at("sigma_r_sq").get<double>();
    cfg.eta1 = j.at("eta1").get<double>();
    cfg.eta2 = j.at("eta2").get<double>();
    cfg.bandwidth_hz = j.at("bandwidth_hz").get<double>();
    cfg.time_bandwidth = j.at("time_bandwidth").get<double>();
    cfg.total_power_mw = j.at("total_power_mw").get<double>();
    cfg.si_suppression_db = j.at("si_suppression_db").get<double>();
    cfg.si_residue_in_noise = j.at("si_residue_in_noise").get<bool>();
    validate_scenario(cfg);
    return cfg;
}

json scenario_report_json(const ScenarioConfig& cfg) {
    auto gain = [](double lin) {
        return json{{"db", format_sig6(linear_to_db(lin))}, {"linear", format_sig6(lin)}};
    };
    auto power = [](double mw) {
        return json{{"dbm", format_sig6(mw_to_dbm(mw))}, {"mw", format_sig6(mw)}};
    };
    return json{
        {"h1_gain", gain(cfg.h1_gain)},
        {"h2_gain", gain(cfg.h2_gain)},
        {"sigma1_sq", power(cfg.sigma1_sq)},
        {"sigma2_sq", power(cfg.sigma2_sq)},
        {"sigma_r_sq", power(cfg.sigma_r_sq)},
        {"total_power", power(cfg.total_power_mw)},
        {"eta1_m2", format_sig6(cfg.eta1)},
        {"eta2_m2", format_sig6(cfg.eta2)},
        {"bandwidth_hz", format_sig6(cfg.bandwidth_hz)},
        {"time_bandwidth", format_sig6(cfg.time_bandwidth)},
        {"duration_s", format_sig6(cfg.duration_s())},
        {"si_suppression_db", format_sig6(cfg.si_suppression_db)},
        {"si_residue_in_noise", cfg.si_residue_in_noise},
    };
}

namespace {

double log10_or_inf(double v) { return std::isfinite(v) ? std::log10(v) : v; }

}  // namespace

std::string tradeoff_csv(const std::vector<TradeoffPoint>& points) {
    CsvWriter csv({"ar_sq", "a1_sq", "a2_sq", "r1", "r2", "r_sum", "sigma_eps_sq", "sigma_eps_sq_norm",
                   "log10_norm", "fairness"});
    for (const auto& p : points) {
        csv.add_row({format_sci9(p.alloc.ar_sq), format_sci9(p.alloc.a1_sq), format_sci9(p.alloc.a2_sq),
                     format_sci9(p.r1), format_sci9(p.r2), format_sci9(p.r_sum), format_sci9(p.sigma_eps_sq),
                     format_sci9(p.sigma_eps_sq_normalized), format_sci9(log10_or_inf(p.sigma_eps_sq_normalized)),
                     format_sci9(p.fairness)});
    }
    return csv.str();
}

json tradeoff_json(const TradeoffPoint& p) {
    // JSON has no inf/nan; nlohmann writes them as null.
    return json{
        {"ar_sq", p.alloc.ar_sq},
        {"a1_sq", p.alloc.a1_sq},
        {"a2_sq", p.alloc.a2_sq},
        {"r1", p.r1},
        {"r2", p.r2},
        {"r_sum", p.r_sum},
        {"sigma_eps_sq", p.sigma_eps_sq},
        {"sigma_eps_sq_norm", p.sigma_eps_sq_normalized},
        {"log10_norm", log10_or_inf(p.sigma_eps_sq_normalized)},
        {"fairness", p.fairness},
    };
}

json mc_report_json(const McDelayReport& r) {
    return json{
        {"trials", r.trials},
        {"target", r.target},
        {"true_delay_s", r.true_delay_s},
        {"snr_post_db", r.snr_post_db},
        {"mean_estimate_s", r.mean_estimate_s},
        {"bias_s", r.bias_s},
        {"empirical_var", r.empirical_var},
        {"mean_sq_error", r.mean_sq_error},
        {"crlb", r.crlb},
        {"efficiency", r.efficiency},
        {"seed", r.seed},
    };
}

}  // namespace jrc::cli
