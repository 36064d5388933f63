#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "bsf/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "bsf");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = bsf::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "bsf_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::vector<std::vector<double>> csv_rows(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

using json = nlohmann::json;

TEST_CASE("solve the oscillator ladder") {
    const auto r = run({"solve", "--model", "spherical_oscillator", "--n", "0..3", "--l", "0"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["schema"] == 1);
    const std::vector<double> want{1.5, 3.5, 5.5, 7.5};
    REQUIRE(j["results"].size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(j["results"][i]["energy"].get<double>() == doctest::Approx(want[i]).epsilon(1e-12));
}

TEST_CASE("solve Kratzer with explicit parameters") {
    const auto r = run({"solve", "--model", "kratzer", "--param", "De=1", "--param", "a=1", "--n", "0", "--l", "0"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["results"][0]["value"].get<double>() == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("configuration errors exit with 2") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"solve", "--model", "unknown_model"},
             {"solve", "--model", "kratzer", "--param", "De"},
             {"solve", "--model", "kratzer", "--param", "bogus=1"},
             {"solve", "--model", "kratzer", "--n", "-1"},
             {"solve", "--model", "kratzer", "--engine", "magic"},
             {"solve", "--model", "kratzer", "--tol", "bogus=1"},
             {"solve", "--model", "dirac_morse", "--engine", "shooting"},
             {"wavefunction", "--model", "spherical_oscillator", "--samples", "0"},
             {"solve"},
             {"frobnicate"},
         }) {
        const auto r = run(args);
        CAPTURE(args[0]);
        CHECK(r.code == bsf::exit_config);
        const auto e = json::parse(r.err);
        CHECK(e["error"]["exit_code"] == 2);
    }
}

TEST_CASE("solver failures exit with 3") {
    const auto r = run({"solve", "--model", "hulthen", "--n", "1"});
    CHECK(r.code == bsf::exit_solver);
    CHECK(json::parse(r.err)["error"]["kind"] == "NoRootInBracket");
}

TEST_CASE("verify passes and fails by tolerance") {
    const auto ok = run({"verify", "--model", "spherical_oscillator"});
    CHECK(ok.code == 0);
    const auto j = json::parse(ok.out);
    for (const auto& c : j["checks"]) {
        for (const auto& [k, v] : c["deltas"].items()) CHECK(v.get<double>() < 1e-6);
    }
    const auto mr = run({"verify", "--model", "manning_rosen", "--n", "0..1", "--l", "0,1", "--param", "Atilde=10"});
    CHECK(mr.code == 0);
    const auto bad = run({"verify", "--model", "spherical_oscillator", "--n", "1", "--tol", "shooting=1e-15"});
    CHECK(bad.code == bsf::exit_disagreement);
    CHECK(json::parse(bad.out)["pass"] == false);
}

TEST_CASE("solve output is byte-identical across runs") {
    const std::vector<std::string> args{"solve", "--model", "manning_rosen", "--n", "0..2", "--l", "0..2",
                                        "--param", "Atilde=30", "--engine", "formula,aim"};
    const auto a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto csv = args;
    csv.push_back("--format");
    csv.push_back("csv");
    CHECK(run(csv).out == run(csv).out);
}

TEST_CASE("reports replay as fixtures") {
    const auto path = scratch("verify.json");
    REQUIRE(run({"verify", "--model", "kratzer", "--n", "0..1", "--out", path.string()}).code == 0);
    const auto replay = run({"verify", "--fixture", path.string()});
    CHECK(replay.code == 0);
    CHECK(json::parse(replay.out)["fixture"]["verdicts_match"] == true);

    const auto failing = scratch("failing.json");
    REQUIRE(run({"verify", "--model", "kratzer", "--tol", "shooting=1e-15", "--out", failing.string()}).code == 4);
    const auto again = run({"verify", "--fixture", failing.string()});
    CHECK(again.code == 4);
    CHECK(json::parse(again.out)["fixture"]["verdicts_match"] == true);

    const auto solved = scratch("solve.json");
    REQUIRE(run({"solve", "--model", "kratzer", "--n", "0..2", "--out", solved.string()}).code == 0);
    const auto values = run({"verify", "--fixture", solved.string()});
    CHECK(values.code == 0);
    CHECK(json::parse(values.out)["fixture"]["values_reproduced"] == true);
    CHECK_FALSE(std::filesystem::exists(solved.string() + ".tmp"));
}

TEST_CASE("oscillator ground state samples") {
    const auto r = run({"wavefunction", "--model", "spherical_oscillator", "--n", "0", "--l", "0", "--samples", "200"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# model=spherical_oscillator") != std::string::npos);
    CHECK(r.out.find("r,s,psi_unnormalized,psi_normalized") != std::string::npos);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 200);
    const double N = 2 / std::pow(std::numbers::pi, 0.25);
    double worst = 0;
    for (const auto& row : rows) worst = std::max(worst, std::abs(row[3] - N * std::exp(-row[0] * row[0] / 2)));
    CHECK(worst < 1e-6);
}

TEST_CASE("first excited state has one interior node") {
    const auto r = run({"wavefunction", "--model", "spherical_oscillator", "--n", "1", "--l", "0"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    int changes = 0;
    for (std::size_t i = 2; i < rows.size(); ++i)
        if ((rows[i][3] < 0) != (rows[i - 1][3] < 0) && rows[i][3] != 0 && rows[i - 1][3] != 0) ++changes;
    CHECK(changes == 1);
}

TEST_CASE("catalog listing") {
    const auto r = run({"catalog"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["models"].size() >= 10);
    CHECK(run({"--help"}).code == 0);
}
