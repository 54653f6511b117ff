#include "commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

#include "jrc/errors.hpp"
#include "jrc/format.hpp"
#include "jrc/optimizer.hpp"
#include "jrc/waveform_lab.hpp"
#include "report_io.hpp"

namespace jrc::cli {

namespace fs = std::filesystem;

namespace {

/// Everything needed to reproduce one run. Serialized verbatim into the manifest.
struct Invocation {
    std::string command;
    std::optional<ScenarioConfig> scenario;
    json params = json::object();
};

struct OutputSet {
    std::vector<std::pair<fs::path, std::string>> files;
    json notes = json::array();
    std::string summary;
    int exit_code = kExitOk;
};

// ---------------------------------------------------------------- parsing

double parse_double(std::string_view text, const std::string& what) {
    double v = 0.0;
    const char* b = text.data();
    const char* e = text.data() + text.size();
    if (!text.empty() && *b == '+') ++b;
    const auto [ptr, ec] = std::from_chars(b, e, v);
    if (text.empty() || ec != std::errc{} || ptr != e || !std::isfinite(v)) {
        throw ValidationError(what, "not a finite number: '" + std::string(text) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    while (true) {
        const auto pos = s.find(sep);
        parts.push_back(s.substr(0, pos));
        if (pos == std::string_view::npos) break;
        s = s.substr(pos + 1);
    }
    return parts;
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
    if (text.empty()) throw ValidationError(what, "list is empty");
    std::vector<double> out;
    for (const auto part : split(text, ',')) out.push_back(parse_double(part, what));
    return out;
}

json parse_grid(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ValidationError("grid", "expected lo:hi:n");
    const double lo = parse_double(parts[0], "grid");
    const double hi = parse_double(parts[1], "grid");
    const double n = parse_double(parts[2], "grid");
    if (n < 1 || n != std::floor(n) || n > 1e7) throw ValidationError("grid", "n must be a positive integer");
    if (!(lo >= 0.0 && lo < 1.0 && hi >= 0.0 && hi < 1.0)) {
        throw ValidationError("grid", "bounds must lie in [0, 1)");
    }
    if (n > 1 && !(hi > lo)) throw ValidationError("grid", "hi must exceed lo");
    return json{{"lo", lo}, {"hi", hi}, {"n", static_cast<std::size_t>(n)}};
}

std::vector<double> grid_from(const json& g) {
    return uniform_grid(g.at("lo").get<double>(), g.at("hi").get<double>(), g.at("n").get<std::size_t>());
}

WaveformSpec waveform_from(const Invocation& inv) {
    return WaveformSpec::from_scenario(*inv.scenario, parse_waveform_kind(inv.params.at("waveform").get<std::string>()));
}

std::string gap_label(double gap) {
    std::string s = format_exact(gap);
    for (auto& c : s) {
        if (c == '.') c = 'p';
    }
    return s;
}

fs::path sibling(const fs::path& out, const std::string& suffix) {
    fs::path p = out;
    p.replace_filename(out.stem().string() + suffix);
    return p;
}

fs::path manifest_path(const fs::path& out) { return fs::path(out.string() + ".manifest.json"); }

// ---------------------------------------------------------------- commands

OutputSet do_sweep(const Invocation& inv, const fs::path& out) {
    const double r02 = inv.params.at("r02").get<double>();
    const auto grid = grid_from(inv.params.at("grid"));
    const SweepResult sweep = tradeoff_sweep(*inv.scenario, r02, waveform_from(inv), grid);

    OutputSet o;
    o.files.emplace_back(out, tradeoff_csv(sweep.points));
    o.notes.push_back(json{{"kappa_min", sweep.kappa_min}});
    if (sweep.infeasible_tail_start) {
        o.notes.push_back(json{{"infeasible_tail_start", *sweep.infeasible_tail_start}});
    }
    o.summary = "sweep: " + std::to_string(sweep.points.size()) + " feasible points" +
                (sweep.infeasible_tail_start
                     ? "; infeasible for ar_sq > " + format_sig6(*sweep.infeasible_tail_start)
                     : std::string{});
    return o;
}

OutputSet do_starpoints(const Invocation& inv, const fs::path& out) {
    const WaveformSpec spec = waveform_from(inv);
    CsvWriter csv({"r01", "r02", "ar_sq", "r_sum", "sigma_eps_sq_norm"});
    for (const auto& pair : inv.params.at("qos")) {
        const QosRequirement qos{pair.at(0).get<double>(), pair.at(1).get<double>()};
        const TradeoffPoint p = star_point(*inv.scenario, qos, spec);
        csv.add_row({format_sci9(qos.r01), format_sci9(qos.r02), format_sci9(p.alloc.ar_sq), format_sci9(p.r_sum),
                     format_sci9(p.sigma_eps_sq_normalized)});
    }
    OutputSet o;
    o.summary = "starpoints: " + std::to_string(csv.rows()) + " QoS pairs";
    o.files.emplace_back(out, csv.str());
    return o;
}

OutputSet do_fairness(const Invocation& inv, const fs::path& out) {
    const WaveformSpec spec = waveform_from(inv);
    const auto grid = grid_from(inv.params.at("grid"));
    CsvWriter csv({"r02", "ar_sq", "r_sum", "fairness"});
    OutputSet o;
    for (const auto& r02_j : inv.params.at("r02_list")) {
        const double r02 = r02_j.get<double>();
        const SweepResult sweep = tradeoff_sweep(*inv.scenario, r02, spec, grid);
        for (const auto& p : sweep.points) {
            csv.add_row({format_sci9(r02), format_sci9(p.alloc.ar_sq), format_sci9(p.r_sum), format_sci9(p.fairness)});
        }
        o.notes.push_back(json{{"r02", r02}, {"kappa_min", sweep.kappa_min}, {"points", sweep.points.size()}});
    }
    o.summary = "fairness: " + std::to_string(csv.rows()) + " rows";
    o.files.emplace_back(out, csv.str());
    return o;
}

OutputSet do_asymmetry(const Invocation& inv, const fs::path& out) {
    const double r02 = inv.params.at("r02").get<double>();
    const auto gaps = inv.params.at("gaps_db").get<std::vector<double>>();
    const auto grid = grid_from(inv.params.at("grid"));
    const auto cases = asymmetry_sweep(*inv.scenario, r02, waveform_from(inv), gaps, grid);

    OutputSet o;
    json combined{
        {"r02", r02},
        {"waveform", inv.params.at("waveform")},
        {"parameterization", "h1_gain held fixed; h2_gain = h1_gain * 10^(-gap_db/10)"},
        {"cases", json::array()},
    };
    for (const auto& c : cases) {
        json points = json::array();
        for (const auto& p : c.sweep.points) points.push_back(tradeoff_json(p));
        combined["cases"].push_back(json{
            {"gap_db", c.gap_db},
            {"h2_gain", c.cfg.h2_gain},
            {"h2_gain_db", format_sig6(linear_to_db(c.cfg.h2_gain))},
            {"kappa_min", c.sweep.kappa_min},
            {"infeasible_tail_start", c.sweep.infeasible_tail_start ? json(*c.sweep.infeasible_tail_start) : json()},
            {"points", std::move(points)},
        });
        o.files.emplace_back(sibling(out, "_gap" + gap_label(c.gap_db) + "dB.csv"), tradeoff_csv(c.sweep.points));
    }
    o.files.emplace(o.files.begin(), out, combined.dump(2) + "\n");
    o.notes.push_back("asymmetry: h1_gain fixed, weak-user gain lowered by each gap");
    o.summary = "asymmetry: " + std::to_string(cases.size()) + " gaps";
    return o;
}

OutputSet do_region(const Invocation& inv, const fs::path& out) {
    const auto n = inv.params.at("samples").get<std::size_t>();
    const auto seed = inv.params.at("seed").get<std::uint64_t>();
    const auto points = sample_feasible_region(*inv.scenario, waveform_from(inv), n, seed);
    OutputSet o;
    o.files.emplace_back(out, tradeoff_csv(points));
    o.summary = "region: " + std::to_string(points.size()) + " samples";
    return o;
}

OutputSet do_waveform_validate(const Invocation& inv, const fs::path& out) {
    const double bandwidth = inv.params.at("bandwidth_hz").get<double>();
    const double oversampling = inv.params.at("oversampling").get<double>();
    constexpr double kInstFreqTol = 1e-6;

    CsvWriter csv({"waveform", "time_bandwidth", "bandwidth_hz", "sample_rate_hz", "energy_analytic",
                   "energy_numeric", "brms_sq_analytic", "brms_sq_instfreq", "brms_sq_spectrum", "instfreq_rel_err",
                   "spectrum_rel_err", "msq_derivative_rel_err"});
    OutputSet o;
    double worst = 0.0;
    for (const auto& name : inv.params.at("waveforms")) {
        for (const auto& tw : inv.params.at("tw_list")) {
            const WaveformSpec spec{parse_waveform_kind(name.get<std::string>()), bandwidth, tw.get<double>()};
            const double fs_hz = oversampling * bandwidth;
            const SampledWaveform w = synthesize(spec, fs_hz);
            const double b_an = analytic_rms_bandwidth_sq(spec);
            const double b_if = numeric_rms_bandwidth_sq(w, MomentMethod::InstFreq);
            const double b_sp = numeric_rms_bandwidth_sq(w, MomentMethod::Spectrum);
            const DerivativeMoment d = numeric_msq_derivative(w);
            const double if_err = std::abs(b_if / b_an - 1.0);
            worst = std::max(worst, if_err);
            csv.add_row({std::string(to_string(spec.kind)), format_sci9(spec.time_bandwidth), format_sci9(bandwidth),
                         format_sci9(fs_hz), format_sci9(analytic_energy(spec)), format_sci9(numeric_energy(w)),
                         format_sci9(b_an), format_sci9(b_if), format_sci9(b_sp), format_sci9(if_err),
                         format_sci9(std::abs(b_sp / b_an - 1.0)), format_sci9(std::abs(d.per_unit_time / b_if - 1.0))});
        }
    }
    o.files.emplace_back(out, csv.str());
    o.summary = "waveform-validate: worst InstFreq relative error " + format_sci9(worst);
    if (!(worst <= kInstFreqTol)) o.exit_code = kExitCheckFailed;
    return o;
}

OutputSet do_mc_delay(const Invocation& inv, const fs::path& out) {
    const auto& p = inv.params;
    const PowerAllocation alloc{p.at("alloc").at(0).get<double>(), p.at("alloc").at(1).get<double>(),
                                p.at("alloc").at(2).get<double>()};
    const WaveformSpec spec = waveform_from(inv);
    const int target = p.at("target").get<int>();
    ScenarioConfig cfg = *inv.scenario;
    if (!p.at("target_snr_db").is_null()) {
        cfg = with_radar_snr(cfg, alloc, spec, target, p.at("target_snr_db").get<double>());
    }
    McDelayOptions opts;
    opts.oversampling = p.at("oversampling").get<double>();
    opts.threads = p.at("threads").get<unsigned>();
    const McDelayReport r = mc_delay_estimation(cfg, alloc, spec, target, p.at("delay_s").get<double>(),
                                                p.at("trials").get<std::size_t>(), p.at("seed").get<std::uint64_t>(),
                                                opts);
    json doc = mc_report_json(r);
    doc["waveform"] = to_string(spec.kind);
    doc["sigma_r_sq_used"] = cfg.sigma_r_sq;
    OutputSet o;
    o.files.emplace_back(out, doc.dump(2) + "\n");
    o.summary = "mc-delay: efficiency " + format_sig6(r.efficiency) + " at " + format_sig6(r.snr_post_db) + " dB";
    return o;
}

OutputSet do_export_waveform(const Invocation& inv, const fs::path& out) {
    const WaveformSpec spec{parse_waveform_kind(inv.params.at("waveform").get<std::string>()),
                            inv.params.at("bandwidth_hz").get<double>(), inv.params.at("time_bandwidth").get<double>()};
    const SampledWaveform w = synthesize(spec, inv.params.at("oversampling").get<double>() * spec.bandwidth_hz);
    std::ostringstream text;
    write_waveform_text(text, w);
    OutputSet o;
    o.files.emplace_back(out, text.str());
    o.summary = "export-waveform: " + std::to_string(w.samples.size()) + " samples";
    return o;
}

OutputSet execute(const Invocation& inv, const fs::path& out) {
    const std::string& c = inv.command;
    if (c == "sweep") return do_sweep(inv, out);
    if (c == "starpoints") return do_starpoints(inv, out);
    if (c == "fairness") return do_fairness(inv, out);
    if (c == "asymmetry") return do_asymmetry(inv, out);
    if (c == "region") return do_region(inv, out);
    if (c == "waveform-validate") return do_waveform_validate(inv, out);
    if (c == "mc-delay") return do_mc_delay(inv, out);
    if (c == "export-waveform") return do_export_waveform(inv, out);
    throw ValidationError("command", "unknown command '" + c + "'");
}

json manifest_json(const Invocation& inv, const OutputSet& outputs) {
    json files = json::array();
    for (const auto& [path, content] : outputs.files) files.push_back(path.generic_string());
    json m{
        {"tool", "jrc"},
        {"version", kToolVersion},
        {"command", inv.command},
        {"parameters", inv.params},
        {"outputs", files},
        {"notes", outputs.notes},
    };
    if (inv.scenario) {
        m["scenario"] = scenario_to_json(*inv.scenario);
        m["scenario_report"] = scenario_report_json(*inv.scenario);
    } else {
        m["scenario"] = nullptr;
    }
    return m;
}

Invocation invocation_from_manifest(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("manifest", "cannot open '" + path.string() + "'");
    json m;
    try {
        m = json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError("manifest", e.what());
    }
    Invocation inv;
    inv.command = m.at("command").get<std::string>();
    inv.params = m.at("parameters");
    if (!m.at("scenario").is_null()) inv.scenario = scenario_from_json(m.at("scenario"));
    return inv;
}

void write_outputs(const Invocation& inv, const OutputSet& outputs, const fs::path& out, bool force) {
    std::vector<std::pair<fs::path, std::string>> all = outputs.files;
    all.emplace_back(manifest_path(out), manifest_json(inv, outputs).dump(2) + "\n");
    if (!force) {
        for (const auto& [path, content] : all) {
            if (fs::exists(path)) {
                throw ValidationError("out", "'" + path.string() + "' exists (use --force to overwrite)");
            }
        }
    }
    for (const auto& [path, content] : all) {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f) throw ValidationError("out", "cannot write '" + path.string() + "'");
        f << content;
    }
}

ScenarioConfig read_scenario(const std::string& path, std::ostream& err) {
    ScenarioConfig cfg = load_scenario_file(path);
    for (const auto& w : validate_scenario(cfg)) err << "warning: " << w << '\n';
    return cfg;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Power-domain superposition of radar and communications: rate / delay-CRLB studies", "jrc"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string scenario_path;
    std::string out_path;
    bool force = false;
    std::string waveform = "linear";
    std::string grid = "0.01:0.99:200";
    double r02 = 0.7;

    auto add_common = [&](CLI::App* sub, bool with_scenario) {
        if (with_scenario) sub->add_option("scenario", scenario_path, "Scenario file (key=value)")->required();
        sub->add_option("--out", out_path, "Output path")->required();
        sub->add_flag("--force", force, "Overwrite existing outputs");
    };

    auto* sweep = app.add_subcommand("sweep", "Sum-rate vs. estimation-error curve for one weak-user QoS");
    add_common(sweep, true);
    sweep->add_option("--r02", r02, "Weak-user QoS, bits/s/Hz")->capture_default_str();
    sweep->add_option("--waveform", waveform, "linear | parabolic")->capture_default_str();
    sweep->add_option("--grid", grid, "ar_sq grid lo:hi:n")->capture_default_str();

    std::string qos_list = "1.5:0.7,0.7:0.7,1.5:1.5";
    auto* stars = app.add_subcommand("starpoints", "Minimum estimation error under both QoS constraints");
    add_common(stars, true);
    stars->add_option("--qos", qos_list, "Comma-separated r01:r02 pairs")->capture_default_str();
    stars->add_option("--waveform", waveform, "linear | parabolic")->capture_default_str();

    std::string r02_list = "0.7,1,1.5";
    auto* fair = app.add_subcommand("fairness", "Jain fairness along the sweep for several weak-user QoS");
    add_common(fair, true);
    fair->add_option("--r02-list", r02_list, "Comma-separated weak-user QoS values")->capture_default_str();
    fair->add_option("--waveform", waveform, "linear | parabolic")->capture_default_str();
    fair->add_option("--grid", grid, "ar_sq grid lo:hi:n")->capture_default_str();

    std::string gaps = "5,10,15";
    auto* asym = app.add_subcommand("asymmetry", "Sweeps under different channel gaps between the users");
    add_common(asym, true);
    asym->add_option("--r02", r02, "Weak-user QoS, bits/s/Hz")->capture_default_str();
    asym->add_option("--gaps-db", gaps, "Comma-separated |h1|^2/|h2|^2 gaps in dB")->capture_default_str();
    asym->add_option("--waveform", waveform, "linear | parabolic")->capture_default_str();
    asym->add_option("--grid", grid, "ar_sq grid lo:hi:n")->capture_default_str();

    std::size_t samples = 2000;
    std::uint64_t seed = 1;
    auto* region = app.add_subcommand("region", "Uniform samples of the achievable (R_sum, sigma_eps^2) region");
    add_common(region, true);
    region->add_option("--samples", samples, "Number of samples")->capture_default_str()->check(CLI::PositiveNumber);
    region->add_option("--seed", seed, "RNG seed")->capture_default_str();
    region->add_option("--waveform", waveform, "linear | parabolic")->capture_default_str();

    std::string wf_choice = "both";
    std::string tw_list = "100,1000";
    double bandwidth = 20e6;
    double oversampling = kMinOversampling;
    auto* wfv = app.add_subcommand("waveform-validate", "Closed-form vs. numeric energy and rms bandwidth");
    add_common(wfv, false);
    wfv->add_option("--waveform", wf_choice, "linear | parabolic | both")->capture_default_str();
    wfv->add_option("--tw", tw_list, "Comma-separated time-bandwidth products")->capture_default_str();
    wfv->add_option("--bandwidth", bandwidth, "Sweep bandwidth W, Hz")->capture_default_str();
    wfv->add_option("--oversampling", oversampling, "Sample rate / W (>= 8)")->capture_default_str();

    std::string alloc_text = "0:0:1";
    int target = 1;
    std::optional<double> delay;
    std::size_t trials = 2000;
    std::optional<double> target_snr_db;
    unsigned threads = 1;
    auto* mc = app.add_subcommand("mc-delay", "Monte Carlo matched-filter delay estimation vs. CRLB");
    add_common(mc, true);
    mc->add_option("--alloc", alloc_text, "a1_sq:a2_sq:ar_sq")->capture_default_str();
    mc->add_option("--waveform", waveform, "linear | parabolic")->capture_default_str();
    mc->add_option("--target", target, "Target index 1 or 2")->capture_default_str()->check(CLI::Range(1, 2));
    mc->add_option("--delay", delay, "True round-trip delay, s (default T/4)");
    mc->add_option("--trials", trials, "Monte Carlo trials (>= 100)")->capture_default_str();
    mc->add_option("--seed", seed, "RNG seed")->capture_default_str();
    mc->add_option("--target-snr-db", target_snr_db, "Rescale sigma_r^2 to reach this post-integration SNR");
    mc->add_option("--oversampling", oversampling, "Sample rate / W (>= 8)")->capture_default_str();
    mc->add_option("--threads", threads, "Worker threads (results do not depend on it)")->capture_default_str();

    double tw = 1000.0;
    auto* exp = app.add_subcommand("export-waveform", "Write a sampled pulse as time/re/im text");
    add_common(exp, false);
    exp->add_option("--waveform", waveform, "linear | parabolic")->capture_default_str();
    exp->add_option("--tw", tw, "Time-bandwidth product")->capture_default_str();
    exp->add_option("--bandwidth", bandwidth, "Sweep bandwidth W, Hz")->capture_default_str();
    exp->add_option("--oversampling", oversampling, "Sample rate / W (>= 8)")->capture_default_str();

    std::string manifest;
    auto* replay = app.add_subcommand("replay", "Re-run a command from its manifest");
    replay->add_option("manifest", manifest, "Manifest written next to an earlier output")->required();
    replay->add_option("--out", out_path, "Output path")->required();
    replay->add_flag("--force", force, "Overwrite existing outputs");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Invocation inv;
        if (*replay) {
            inv = invocation_from_manifest(manifest);
        } else {
            CLI::App* sub = app.get_subcommands().front();
            inv.command = sub->get_name();
            if (sub != wfv && sub != exp) inv.scenario = read_scenario(scenario_path, err);

            if (sub == sweep) {
                inv.params = {{"r02", r02}, {"waveform", waveform}, {"grid", parse_grid(grid)}};
            } else if (sub == stars) {
                if (qos_list.empty()) throw ValidationError("qos", "list is empty");
                json pairs = json::array();
                for (const auto item : split(qos_list, ',')) {
                    const auto rc = split(item, ':');
                    if (rc.size() != 2) throw ValidationError("qos", "expected r01:r02, got '" + std::string(item) + "'");
                    pairs.push_back({parse_double(rc[0], "qos"), parse_double(rc[1], "qos")});
                }
                inv.params = {{"qos", pairs}, {"waveform", waveform}};
            } else if (sub == fair) {
                inv.params = {{"r02_list", parse_list(r02_list, "r02_list")},
                              {"waveform", waveform},
                              {"grid", parse_grid(grid)}};
            } else if (sub == asym) {
                const auto g = parse_list(gaps, "gaps_db");
                for (const double v : g) {
                    if (!(v > 0.0)) throw ValidationError("gaps_db", "gaps must be > 0 dB");
                }
                inv.params = {{"r02", r02}, {"gaps_db", g}, {"waveform", waveform}, {"grid", parse_grid(grid)}};
            } else if (sub == region) {
                inv.params = {{"samples", samples}, {"seed", seed}, {"waveform", waveform}};
            } else if (sub == wfv) {
                json names = json::array();
                if (wf_choice == "both") {
                    names = {"linear", "parabolic"};
                } else {
                    names.push_back(std::string(to_string(parse_waveform_kind(wf_choice))));
                }
                inv.params = {{"waveforms", names},
                              {"tw_list", parse_list(tw_list, "tw")},
                              {"bandwidth_hz", bandwidth},
                              {"oversampling", oversampling}};
            } else if (sub == mc) {
                const auto a = split(alloc_text, ':');
                if (a.size() != 3) throw ValidationError("alloc", "expected a1_sq:a2_sq:ar_sq");
                const double delay_s = delay.value_or(inv.scenario->duration_s() / 4.0);
                inv.params = {
                    {"alloc", {parse_double(a[0], "alloc"), parse_double(a[1], "alloc"), parse_double(a[2], "alloc")}},
                    {"waveform", waveform},
                    {"target", target},
                    {"delay_s", delay_s},
                    {"trials", trials},
                    {"seed", seed},
                    {"target_snr_db", target_snr_db ? json(*target_snr_db) : json()},
                    {"oversampling", oversampling},
                    {"threads", threads},
                };
            } else if (sub == exp) {
                inv.params = {{"waveform", waveform},
                              {"time_bandwidth", tw},
                              {"bandwidth_hz", bandwidth},
                              {"oversampling", oversampling}};
            }
        }

        const OutputSet outputs = execute(inv, out_path);
        write_outputs(inv, outputs, out_path, force);
        out << outputs.summary << '\n';
        return outputs.exit_code;
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const BelowThresholdError& e) {
        err << "below threshold: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const UndefinedMetricError& e) {
        err << "undefined: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const ValidationError& e) {
        err << "invalid: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "scenario parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ContractError& e) {
        err << "invalid arguments: " << e.what() << '\n';
        return kExitUsage;
    } catch (const json::exception& e) {
        err << "malformed manifest: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
}

}  // namespace jrc::cli
