#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kScenario = std::string(JRC_SOURCE_DIR) + "/scenarios/default.cfg";

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("jrc_cli_test_" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = jrc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(slurp(path));
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

void check_numeric_cells(const std::string& path, std::size_t first_numeric_col = 0) {
    static const std::regex sci9(R"(-?[0-9]\.[0-9]{8}e[+-][0-9]{2,3}|inf|-inf|nan)");
    const auto rows = read_csv(path);
    REQUIRE(rows.size() >= 2);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        for (std::size_t c = first_numeric_col; c < rows[r].size(); ++c) {
            INFO(path << " row " << r << " col " << c << ": " << rows[r][c]);
            CHECK(std::regex_match(rows[r][c], sci9));
        }
    }
    CHECK(slurp(path).find('\r') == std::string::npos);
}

}  // namespace

TEST_CASE("help, version and usage errors", "[cli]") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"sweep", "--help"}).code == 0);
    CHECK(run({"--version"}).code == 0);
    CHECK(run({}).code == 3);
    CHECK(run({"bogus"}).code == 3);
    CHECK(run({"sweep", kScenario}).code == 3);  // missing --out
    CHECK(run({"sweep", kScenario, "--out", "x.csv", "--r02", "abc"}).code == 3);
    CHECK(run({"mc-delay", kScenario, "--out", "x.json", "--target", "3"}).code == 3);
}

TEST_CASE("sweep", "[cli]") {
    TempDir dir;
    const Result r = run({"sweep", kScenario, "--r02", "0.7", "--waveform", "linear", "--out", dir / "s.csv"});
    REQUIRE(r.code == 0);
    check_numeric_cells(dir / "s.csv");
    const auto rows = read_csv(dir / "s.csv");
    CHECK(rows[0][0] == "ar_sq");
    CHECK(rows.size() == 162);
    CHECK_THAT(std::stod(rows.back()[0]), WithinAbs(0.80, 0.01));

    const json m = json::parse(slurp(dir / "s.csv.manifest.json"));
    CHECK(m["command"] == "sweep");
    CHECK(m["parameters"]["r02"] == 0.7);
    CHECK(m["parameters"]["grid"]["n"] == 200);
    CHECK(m["scenario"]["h1_gain"] == 1e-9);
    CHECK(m["scenario_report"]["h1_gain"]["db"] == "-90");
    CHECK(m["tool"] == "jrc");
    bool saw_tail = false;
    for (const auto& note : m["notes"]) {
        if (note.is_object() && note.contains("infeasible_tail_start")) {
            saw_tail = true;
            CHECK_THAT(note["infeasible_tail_start"].get<double>(), WithinAbs(0.8025, 1e-3));
        }
    }
    CHECK(saw_tail);
}

TEST_CASE("sweep errors", "[cli]") {
    TempDir dir;
    CHECK(run({"sweep", kScenario, "--r02", "1.5", "--grid", "0.5:0.9:20", "--out", dir / "a.csv"}).code == 2);
    CHECK_FALSE(fs::exists(dir / "a.csv"));

    std::ofstream(dir / "bad.cfg") << "eta1=0.1\nnot a line\n";
    const Result bad = run({"sweep", dir / "bad.cfg", "--out", dir / "b.csv"});
    CHECK(bad.code == 3);
    CHECK_THAT(bad.err, ContainsSubstring("line 2"));
    CHECK_FALSE(fs::exists(dir / "b.csv"));
    CHECK_FALSE(fs::exists(dir / "b.csv.manifest.json"));

    CHECK(run({"sweep", dir / "missing.cfg", "--out", dir / "c.csv"}).code == 3);
    CHECK(run({"sweep", kScenario, "--grid", "0.1:0.05:10", "--out", dir / "d.csv"}).code == 3);
    CHECK(run({"sweep", kScenario, "--grid", "0.1:1.5:10", "--out", dir / "d.csv"}).code == 3);
    CHECK(run({"sweep", kScenario, "--grid", "0.1:0.5", "--out", dir / "d.csv"}).code == 3);
    CHECK(run({"sweep", kScenario, "--waveform", "square", "--out", dir / "d.csv"}).code == 3);
    CHECK_FALSE(fs::exists(dir / "d.csv"));
}

TEST_CASE("outputs are not overwritten without --force", "[cli]") {
    TempDir dir;
    REQUIRE(run({"sweep", kScenario, "--out", dir / "s.csv"}).code == 0);
    const std::string before = slurp(dir / "s.csv");
    CHECK(run({"sweep", kScenario, "--r02", "1.0", "--out", dir / "s.csv"}).code == 3);
    CHECK(slurp(dir / "s.csv") == before);
    CHECK(run({"sweep", kScenario, "--r02", "1.0", "--out", dir / "s.csv", "--force"}).code == 0);
    CHECK(slurp(dir / "s.csv") != before);
}

TEST_CASE("starpoints", "[cli]") {
    TempDir dir;
    REQUIRE(run({"starpoints", kScenario, "--out", dir / "p.csv"}).code == 0);
    check_numeric_cells(dir / "p.csv");
    const auto rows = read_csv(dir / "p.csv");
    REQUIRE(rows.size() == 4);
    CHECK_THAT(std::stod(rows[1][2]), WithinAbs(0.709, 1e-3));
    CHECK_THAT(std::stod(rows[2][2]), WithinAbs(0.770, 1e-3));
    CHECK_THAT(std::stod(rows[3][2]), WithinAbs(0.258, 1e-3));

    CHECK(run({"starpoints", kScenario, "--qos", "5:5", "--out", dir / "q.csv"}).code == 2);
    CHECK(run({"starpoints", kScenario, "--qos", "", "--out", dir / "q.csv"}).code == 3);
    CHECK(run({"starpoints", kScenario, "--qos", "1.5", "--out", dir / "q.csv"}).code == 3);
    CHECK_FALSE(fs::exists(dir / "q.csv"));
}

TEST_CASE("fairness", "[cli]") {
    TempDir dir;
    REQUIRE(run({"fairness", kScenario, "--out", dir / "f.csv"}).code == 0);
    check_numeric_cells(dir / "f.csv");
    const auto rows = read_csv(dir / "f.csv");
    std::vector<double> at_first;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (std::stod(rows[i][1]) == 0.01) at_first.push_back(std::stod(rows[i][3]));
    }
    REQUIRE(at_first.size() == 3);
    CHECK(at_first[2] > at_first[1]);
    CHECK(at_first[1] > at_first[0]);

    REQUIRE(run({"fairness", kScenario, "--r02-list", "0.7", "--out", dir / "one.csv"}).code == 0);
    for (const auto& row : read_csv(dir / "one.csv")) {
        if (row[0] != "r02") CHECK(std::stod(row[0]) == 0.7);
    }

    CHECK(run({"fairness", kScenario, "--r02-list", "3", "--out", dir / "three.csv"}).code == 2);
    CHECK(run({"fairness", kScenario, "--r02-list", "0.7,x", "--out", dir / "three.csv"}).code == 3);
}

TEST_CASE("asymmetry", "[cli]") {
    TempDir dir;
    REQUIRE(run({"asymmetry", kScenario, "--out", dir / "a.json"}).code == 0);
    for (const char* gap : {"5", "10", "15"}) {
        const std::string csv = dir / ("a_gap" + std::string(gap) + "dB.csv");
        REQUIRE(fs::exists(csv));
        check_numeric_cells(csv);
    }
    CHECK(read_csv(dir / "a_gap10dB.csv") == [&] {
        run({"sweep", kScenario, "--out", dir / "base.csv"});
        return read_csv(dir / "base.csv");
    }());

    const json doc = json::parse(slurp(dir / "a.json"));
    REQUIRE(doc["cases"].size() == 3);
    CHECK_THAT(doc["parameterization"].get<std::string>(), ContainsSubstring("h1_gain held fixed"));
    CHECK(doc["cases"][1]["gap_db"] == 10.0);

    CHECK(run({"asymmetry", kScenario, "--gaps-db", "0", "--out", dir / "z.json"}).code == 3);
    CHECK(run({"asymmetry", kScenario, "--gaps-db", "5,-2", "--out", dir / "z.json"}).code == 3);
    CHECK_FALSE(fs::exists(dir / "z.json"));
}

TEST_CASE("region", "[cli]") {
    TempDir dir;
    REQUIRE(run({"region", kScenario, "--samples", "500", "--seed", "4", "--out", dir / "r.csv"}).code == 0);
    CHECK(read_csv(dir / "r.csv").size() == 501);
    check_numeric_cells(dir / "r.csv");
}

TEST_CASE("waveform-validate", "[cli]") {
    TempDir dir;
    const Result r = run({"waveform-validate", "--out", dir / "w.csv"});
    REQUIRE(r.code == 0);
    check_numeric_cells(dir / "w.csv", 1);
    const auto rows = read_csv(dir / "w.csv");
    REQUIRE(rows.size() == 5);
    CHECK(rows[1][0] == "linear");
    CHECK(rows[3][0] == "parabolic");

    REQUIRE(run({"waveform-validate", "--waveform", "parabolic", "--tw", "1000", "--out", dir / "p.csv"}).code == 0);
    CHECK(read_csv(dir / "p.csv").size() == 2);
    CHECK(run({"waveform-validate", "--oversampling", "4", "--out", dir / "u.csv"}).code == 3);
}

TEST_CASE("mc-delay", "[cli]") {
    TempDir dir;
    const Result low = run({"mc-delay", kScenario, "--trials", "200", "--out", dir / "low.json"});
    CHECK(low.code == 2);
    CHECK_THAT(low.err, ContainsSubstring("below"));
    CHECK_FALSE(fs::exists(dir / "low.json"));

    REQUIRE(run({"mc-delay", kScenario, "--trials", "300", "--target-snr-db", "20", "--seed", "9", "--threads", "2",
                 "--out", dir / "mc.json"})
                .code == 0);
    const json doc = json::parse(slurp(dir / "mc.json"));
    CHECK(doc["trials"] == 300);
    CHECK(doc["seed"] == 9);
    CHECK_THAT(doc["snr_post_db"].get<double>(), WithinAbs(20.0, 1e-9));
    CHECK(doc["efficiency"].get<double>() > 0.5);

    CHECK(run({"mc-delay", kScenario, "--alloc", "0.5:0.5", "--out", dir / "x.json"}).code == 3);
    CHECK(run({"mc-delay", kScenario, "--alloc", "0.5:0.5:0", "--target-snr-db", "20", "--out", dir / "x.json"})
              .code != 0);
}

TEST_CASE("export-waveform", "[cli]") {
    TempDir dir;
    REQUIRE(run({"export-waveform", "--tw", "10", "--out", dir / "x.txt"}).code == 0);
    const std::string text = slurp(dir / "x.txt");
    CHECK_THAT(text, ContainsSubstring("samples=80"));
}

TEST_CASE("replay reproduces every command byte for byte", "[cli]") {
    TempDir dir;
    const std::vector<std::vector<std::string>> commands{
        {"sweep", kScenario, "--r02", "1.0", "--grid", "0.05:0.6:37", "--out", dir / "sweep.csv"},
        {"starpoints", kScenario, "--out", dir / "stars.csv"},
        {"fairness", kScenario, "--out", dir / "fair.csv"},
        {"asymmetry", kScenario, "--out", dir / "asym.json"},
        {"region", kScenario, "--samples", "300", "--seed", "12", "--out", dir / "region.csv"},
        {"waveform-validate", "--tw", "100", "--out", dir / "wv.csv"},
        {"mc-delay", kScenario, "--trials", "150", "--target-snr-db", "25", "--out", dir / "mc.json"},
        {"export-waveform", "--tw", "20", "--waveform", "parabolic", "--out", dir / "wave.txt"},
    };
    for (const auto& cmd : commands) {
        INFO(cmd[0]);
        REQUIRE(run(cmd).code == 0);
        const std::string out = cmd.back();
        const fs::path p(out);
        const std::string replayed = (p.parent_path() / ("re_" + p.filename().string())).string();
        REQUIRE(run({"replay", out + ".manifest.json", "--out", replayed}).code == 0);
        CHECK(slurp(replayed) == slurp(out));

        const json a = json::parse(slurp(out + ".manifest.json"));
        const json b = json::parse(slurp(replayed + ".manifest.json"));
        CHECK(a["parameters"] == b["parameters"]);
        CHECK(a["scenario"] == b["scenario"]);
        CHECK(run({"replay", out + ".manifest.json", "--out", replayed}).code == 3);
    }
    const std::string a = slurp(dir / "re_asym_gap15dB.csv");
    CHECK(a == slurp(dir / "asym_gap15dB.csv"));

    std::ofstream(dir / "broken.json") << "{ not json";
    CHECK(run({"replay", dir / "broken.json", "--out", dir / "never.csv"}).code == 3);
    CHECK(run({"replay", dir / "nothing.json", "--out", dir / "never.csv"}).code == 3);
}
