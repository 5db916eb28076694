#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "csv.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = parfima::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

fs::path scratch(const std::string& name) {
    const fs::path dir = PARFIMA_TEST_TMPDIR;
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("coeffs with zero memory") {
    const auto r = run({"coeffs", "--kind", "big-pi", "--d", "0,0", "--p", "2", "--n", "5"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == std::vector<std::string>{"j", "season_1", "season_2"});
    CHECK(rows[1] == std::vector<std::string>{"0", "1", "1"});
    for (std::size_t j = 2; j < rows.size(); ++j) {
        CHECK(std::stod(rows[j][1]) == 0.0);
        CHECK(std::stod(rows[j][2]) == 0.0);
    }
}

TEST_CASE("coeffs kinds") {
    auto second_row = [](const std::string& kind) {
        return parse_csv(run({"coeffs", "--kind", kind, "--d", "0.2,0.4", "--n", "2"}).out)[3];
    };
    CHECK(std::stod(second_row("big-pi")[1]) == doctest::Approx(-0.04));
    CHECK(std::stod(second_row("pi")[2]) == doctest::Approx(-0.12));
    CHECK(std::stod(second_row("psi")[2]) == doctest::Approx(0.28));
    CHECK(parse_csv(run({"coeffs", "--kind", "big-psi", "--d", "0.2,0.4", "--n", "1"}).out)[2][1] == "0.2");

    const auto j = json::parse(run({"coeffs", "--d", "0.3", "--n", "3", "--format", "json"}).out);
    CHECK(j["seasons"][0].size() == 4);
}

TEST_CASE("negative d values parse") {
    const auto r = run({"coeffs", "--d", "-0.3,-0.2", "--n", "1", "--kind", "psi"});
    REQUIRE(r.code == 0);
    CHECK(parse_csv(r.out)[2][1] == "-0.3");
}

TEST_CASE("check reports clauses") {
    const auto r = run({"check", "--d", "-0.2,-0.7"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["invertible"] == true);
    CHECK(j["clauses"]["invertible"]["unit"] == true);
    CHECK(j["clauses"]["invertible"]["interval"] == false);

    const auto edge = json::parse(run({"check", "--d", "0.5,0.1"}).out);
    CHECK(edge["warnings"].size() >= 1);
}

TEST_CASE("simulate is byte-identical for identical configs") {
    const std::vector<std::string> args = {"simulate", "--d", "0.2,0.3", "--seed", "7", "--n", "200",
                                           "--truncation", "300"};
    const auto a = run(args);
    const auto b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto rows = parse_csv(a.out);
    CHECK(rows[0] == std::vector<std::string>{"t", "season", "x", "epsilon"});
    CHECK(rows.size() == 201);
    CHECK(rows[1][1] == "1");
    CHECK(rows[2][1] == "2");
}

TEST_CASE("simulate --out writes a sidecar that reproduces the run") {
    const auto file = scratch("sim.csv");
    const auto r = run({"simulate", "--d", "0.2,0.3", "--sigma", "1,1.5", "--seed", "11", "--n", "120",
                        "--truncation", "100", "--burn-in", "40", "--start-season", "2", "--out", file.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    const auto meta = json::parse(slurp(file.string() + ".json"));
    CHECK(meta["method"] == "truncated moving-average");
    CHECK(meta["generator"] == "mt19937_64+box-muller-53");
    CHECK(meta["effective"]["seed"] == 11);
    CHECK(meta["effective"]["burn_in"] == 40);
    CHECK(meta["params"]["sigma"][1] == 1.5);

    std::vector<std::string> replay = {"simulate", "--d"};
    std::string d, sigma;
    for (const auto& v : meta["params"]["d"]) d += (d.empty() ? "" : ",") + parfima::cli::format_double(v.get<double>());
    for (const auto& v : meta["params"]["sigma"]) sigma += (sigma.empty() ? "" : ",") + parfima::cli::format_double(v.get<double>());
    const auto& e = meta["effective"];
    replay.insert(replay.end(), {d, "--sigma", sigma, "--seed", std::to_string(e["seed"].get<std::uint64_t>()),
                                 "--n", std::to_string(e["n"].get<std::size_t>()),
                                 "--truncation", std::to_string(e["truncation"].get<std::size_t>()),
                                 "--burn-in", std::to_string(e["burn_in"].get<std::size_t>()),
                                 "--start-season", std::to_string(e["start_season"].get<int>()),
                                 "--mode", e["mode"].get<std::string>()});
    CHECK(run(replay).out == slurp(file));
}

TEST_CASE("simulate --filter-length adds recovered innovations") {
    const auto r = run({"simulate", "--d", "0.2,0.3", "--n", "50", "--truncation", "60", "--filter-length", "10"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    CHECK(rows[0].back() == "epsilon_hat");
    CHECK(rows[1].back().empty());
    CHECK_FALSE(rows[11].back().empty());
}

TEST_CASE("acf from a simulated file and asymptotic") {
    const auto file = scratch("acf_input.csv");
    REQUIRE(run({"simulate", "--d", "0.1,0.2", "--n", "400", "--truncation", "50", "--out", file.string()}).code == 0);
    const auto r = run({"acf", "--input", file.string(), "--max-lag", "5"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    CHECK(rows[0] == std::vector<std::string>{"h", "season_1", "season_2"});
    CHECK(rows.size() == 7);
    CHECK(std::stod(rows[1][1]) > 0.0);

    const auto a = run({"acf", "--asymptotic", "--d", "0.3,0.3", "--max-lag", "2"});
    REQUIRE(a.code == 0);
    CHECK(std::stod(parse_csv(a.out)[2][1]) == doctest::Approx(0.43290096478896987839));
}

TEST_CASE("converge --table 1") {
    const auto r = run({"converge", "--table", "1"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    CHECK(rows[0] == std::vector<std::string>{"N", "d_spec", "season", "delta", "partial_abs_sum", "verdict"});
    CHECK(rows.size() == 1 + 10 * 5 * 2);
    int convergent = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) convergent += rows[i][5] == "CONVERGENT";
    CHECK(convergent >= 8 * 10);
    CHECK(rows[1][1] == "0.15;0.8");
}

TEST_CASE("converge with explicit checkpoints and sidecar comparison") {
    const auto r = run({"converge", "--d", "-0.6,1.49", "--N", "10,50,100"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    CHECK(rows.size() == 1 + 3 * 2);
    CHECK(rows[1][5] == "DIVERGENT");

    const auto file = scratch("table2.csv");
    REQUIRE(run({"converge", "--table", "2", "--out", file.string()}).code == 0);
    const auto meta = json::parse(slurp(file.string() + ".json"));
    CHECK(meta["reference_comparison"].size() == 15);
}

TEST_CASE("errors are single machine-parsable lines") {
    const auto missing = run({"coeffs"});
    CHECK(missing.code == 2);
    CHECK(missing.err.rfind("error: usage: ", 0) == 0);
    CHECK(std::count(missing.err.begin(), missing.err.end(), '\n') == 1);

    const auto domain = run({"coeffs", "--d", "0.1,0.2", "--sigma", "1,-1"});
    CHECK(domain.code == 1);
    CHECK(domain.err.rfind("error: domain: ", 0) == 0);

    const auto mismatch = run({"check", "--d", "0.1", "--p", "2"});
    CHECK(mismatch.code == 1);
    CHECK(mismatch.err.rfind("error: dimension_mismatch: ", 0) == 0);

    const auto causal = run({"simulate", "--d", "1.2,0.1", "--n", "5"});
    CHECK(causal.code == 1);
    CHECK(causal.err.rfind("error: not_causal: ", 0) == 0);

    const auto literal = run({"coeffs", "--d", "1/3"});
    CHECK(literal.code == 1);
    CHECK(literal.err.rfind("error: invalid_argument: ", 0) == 0);

    const auto io = run({"acf", "--input", "/nonexistent/path.csv"});
    CHECK(io.code == 1);
    CHECK(io.err.rfind("error: io: ", 0) == 0);

    CHECK(run({"coeffs", "--d", "0.1", "--mode", "sideways"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("help goes to stdout with status 0") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("simulate") != std::string::npos);
}

TEST_CASE("format_double round-trips") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 2000; ++i) {
        const double v = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
        CHECK(parfima::cli::parse_double_list(parfima::cli::format_double(v)).front() == v);
    }
    CHECK(parfima::cli::format_double(0.1) == "0.1");
    CHECK(parfima::cli::parse_double_list("+0.5, -1e-3") == std::vector<double>{0.5, -1e-3});
}
