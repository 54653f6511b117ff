#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "jrc/optimizer.hpp"
#include "jrc/scenario.hpp"
#include "jrc/waveform_lab.hpp"

namespace jrc::cli {

using nlohmann::json;

/// Column-ordered CSV with `\n` line endings.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);
    std::string str() const;
    std::size_t rows() const { return rows_.size(); }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// 6 significant digits, for human-facing unit conversions.
std::string format_sig6(double value);

/// Exact linear values, used to rebuild the config on replay.
json scenario_to_json(const ScenarioConfig& cfg);
ScenarioConfig scenario_from_json(const json& j);
/// Gains in dB and powers in dBm next to their linear values (6 significant digits).
json scenario_report_json(const ScenarioConfig& cfg);

/// One row per point:
/// ar_sq,a1_sq,a2_sq,r1,r2,r_sum,sigma_eps_sq,sigma_eps_sq_norm,log10_norm,fairness
std::string tradeoff_csv(const std::vector<TradeoffPoint>& points);
json tradeoff_json(const TradeoffPoint& p);

json mc_report_json(const McDelayReport& r);

}  // namespace jrc::cli
