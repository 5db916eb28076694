#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "csv.hpp"
#include "parfima/parfima.hpp"

namespace parfima::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

struct ModelOptions {
    int p = 0;  // 0: take the period from --d
    std::string d;
    std::string sigma;
    std::string mode = "backward";
    std::string format = "csv";
    std::string out;
};

struct CoeffsOptions {
    std::string kind = "big-pi";
    std::size_t n = 100;
};

struct SimulateOptions {
    std::size_t n = 1000;
    std::uint64_t seed = 0;
    std::size_t truncation = 5000;
    std::optional<std::size_t> burn_in;
    int start_season = 1;
    std::optional<std::size_t> filter_length;
};

struct AcfCliOptions {
    bool asymptotic = false;
    std::string input;
    std::size_t max_lag = 50;
    bool centered = false;
};

struct ConvergeOptions {
    std::string checkpoints = "10,25,50,75,100";
    int table = 0;
    double tau = ConvergenceThresholds{}.decay_ratio;
    double floor = ConvergenceThresholds{}.divergence_floor;
    double rho = ConvergenceThresholds{}.growth_factor;
};

void add_model_options(CLI::App& sub, ModelOptions& m, bool needs_d = true) {
    auto* d = sub.add_option("--d", m.d, "memory parameters d_1..d_p, comma-separated");
    if (needs_d) d->required();
    sub.add_option("--p", m.p, "period (defaults to the number of --d values)")->check(CLI::PositiveNumber);
    sub.add_option("--sigma", m.sigma, "innovation scales sigma_1..sigma_p (default all 1)");
    sub.add_option("--mode", m.mode, "season indexing of the periodic recursion")
        ->check(CLI::IsMember({"backward", "paper"}));
    sub.add_option("--format", m.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    sub.add_option("--out", m.out, "output file; a <out>.json metadata sidecar is written next to it");
}

SeasonalParams make_params(const ModelOptions& m) {
    std::vector<double> d = parse_double_list(m.d);
    const int p = m.p > 0 ? m.p : static_cast<int>(d.size());
    std::vector<double> sigma = m.sigma.empty()
                                    ? std::vector<double>(static_cast<std::size_t>(p), 1.0)
                                    : parse_double_list(m.sigma);
    return {p, std::move(d), std::move(sigma)};
}

json params_json(const SeasonalParams& params) {
    return {{"p", params.period()},
            {"d", std::vector<double>(params.d().begin(), params.d().end())},
            {"sigma", std::vector<double>(params.sigma().begin(), params.sigma().end())}};
}

std::string d_spec(const SeasonalParams& params) {
    std::string s;
    for (double d : params.d()) {
        if (!s.empty()) s += ';';
        s += format_double(d);
    }
    return s;
}

// Destination for the primary artifact plus its sidecar.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : path_(path), fallback_(fallback) {}

    void write(const std::string& body) const {
        if (path_.empty()) {
            fallback_ << body;
            return;
        }
        std::ofstream f(path_, std::ios::binary);
        if (!f) throw IoError("cannot write " + path_);
        f << body;
    }

    void write_sidecar(const json& meta) const {
        if (path_.empty()) return;
        const std::string sidecar = path_ + ".json";
        std::ofstream f(sidecar, std::ios::binary);
        if (!f) throw IoError("cannot write " + sidecar);
        f << meta.dump(2) << '\n';
    }

private:
    std::string path_;
    std::ostream& fallback_;
};

json base_meta(const std::string& subcommand, const std::vector<std::string>& args,
               const ModelOptions& m) {
    std::vector<std::string> argv = {"parfima"};
    argv.insert(argv.end(), args.begin(), args.end());
    return {{"tool", "parfima"},
            {"version", kVersion},
            {"subcommand", subcommand},
            {"argv", argv},
            {"format", m.format},
            {"output", m.out}};
}

std::string csv_header(const std::string& first, int p) {
    std::string h = first;
    for (int i = 1; i <= p; ++i) h += ",season_" + std::to_string(i);
    return h + "\n";
}

int run_coeffs(const ModelOptions& m, const CoeffsOptions& c, const std::vector<std::string>& args,
               std::ostream& out) {
    const SeasonalParams params = make_params(m);
    const IndexingMode mode = parse_indexing_mode(m.mode);
    const int p = params.period();
    std::vector<CoefficientSeries> series;
    for (int i = 1; i <= p; ++i) {
        const Memory d(params.d(i));
        if (c.kind == "pi") series.push_back(ar_coefficients(d, c.n));
        else if (c.kind == "psi") series.push_back(ma_coefficients(d, c.n));
        else if (c.kind == "big-pi") series.push_back(big_pi(params, i, c.n, mode));
        else series.push_back(big_psi(params, i, c.n, mode));
    }

    std::string body;
    if (m.format == "json") {
        json seasons = json::array();
        for (const auto& s : series) seasons.push_back(std::vector<double>(s.values().begin(), s.values().end()));
        body = json{{"kind", c.kind}, {"mode", m.mode}, {"n", c.n}, {"params", params_json(params)},
                    {"seasons", seasons}}
                   .dump(2) + "\n";
    } else {
        std::ostringstream csv;
        csv << csv_header("j", p);
        for (std::size_t j = 0; j <= c.n; ++j) {
            csv << j;
            for (const auto& s : series) csv << ',' << format_double(s[j]);
            csv << '\n';
        }
        body = csv.str();
    }
    const Sink sink(m.out, out);
    sink.write(body);
    json meta = base_meta("coeffs", args, m);
    meta["params"] = params_json(params);
    meta["effective"] = {{"kind", c.kind}, {"n", c.n}, {"mode", m.mode}};
    sink.write_sidecar(meta);
    return 0;
}

int run_check(const ModelOptions& m, const std::vector<std::string>& args, std::ostream& out) {
    const SeasonalParams params = make_params(m);
    const RegionReport r = classify_region(params);
    const json report = {
        {"params", params_json(params)},
        {"invertible", r.invertible},
        {"causal", r.causal},
        {"clauses",
         {{"invertible", {{"interval", r.invertible_interval_clause}, {"unit", r.invertible_unit_clause}}},
          {"causal", {{"interval", r.causal_interval_clause}, {"unit", r.causal_unit_clause}}}}},
        {"warnings", r.warnings},
    };
    const Sink sink(m.out, out);
    sink.write(report.dump(2) + "\n");
    json meta = base_meta("check", args, m);
    meta["params"] = params_json(params);
    sink.write_sidecar(meta);
    return 0;
}

int run_simulate(const ModelOptions& m, const SimulateOptions& s,
                 const std::vector<std::string>& args, std::ostream& out) {
    const SeasonalParams params = make_params(m);
    SimulationOptions options;
    options.truncation = s.truncation;
    options.burn_in = s.burn_in.value_or(s.truncation);
    options.seed = s.seed;
    options.start_season = s.start_season;
    const SamplePath path = simulate_path(params, s.n, options);

    std::optional<std::vector<double>> recovered;
    if (s.filter_length) {
        recovered = recover_innovations(path, *s.filter_length, parse_indexing_mode(m.mode));
    }
    const std::size_t k = s.filter_length.value_or(0);

    std::string body;
    if (m.format == "json") {
        json rows = json::array();
        for (std::size_t t = 0; t < path.size(); ++t) {
            json row = {{"t", t}, {"season", path.season_at(t)}, {"x", path.values()[t]},
                        {"epsilon", path.innovations()[t]}};
            if (recovered && t >= k) row["epsilon_hat"] = (*recovered)[t - k];
            rows.push_back(row);
        }
        body = rows.dump(2) + "\n";
    } else {
        std::ostringstream csv;
        csv << "t,season,x,epsilon" << (recovered ? ",epsilon_hat" : "") << '\n';
        for (std::size_t t = 0; t < path.size(); ++t) {
            csv << t << ',' << path.season_at(t) << ',' << format_double(path.values()[t]) << ','
                << format_double(path.innovations()[t]);
            if (recovered) {
                csv << ',';
                if (t >= k) csv << format_double((*recovered)[t - k]);
            }
            csv << '\n';
        }
        body = csv.str();
    }
    const Sink sink(m.out, out);
    sink.write(body);
    json meta = base_meta("simulate", args, m);
    meta["params"] = params_json(params);
    meta["method"] = "truncated moving-average";
    meta["generator"] = std::string(kGeneratorName);
    meta["effective"] = {{"n", s.n},
                         {"seed", s.seed},
                         {"truncation", options.truncation},
                         {"burn_in", options.burn_in},
                         {"start_season", options.start_season},
                         {"mode", m.mode}};
    if (s.filter_length) meta["effective"]["filter_length"] = *s.filter_length;
    sink.write_sidecar(meta);
    return 0;
}

int sidecar_period(const std::string& input) {
    std::ifstream f(input + ".json");
    if (!f) return 0;
    try {
        const json meta = json::parse(f);
        return meta.at("params").at("p").get<int>();
    } catch (const json::exception&) {
        return 0;
    }
}

int run_acf(const ModelOptions& m, const AcfCliOptions& a, const std::vector<std::string>& args,
            std::ostream& out) {
    std::optional<PeriodicAcf> acf;
    json meta = base_meta("acf", args, m);
    if (a.asymptotic) {
        if (m.d.empty()) throw InvalidArgument("acf --asymptotic needs --d");
        const SeasonalParams params = make_params(m);
        acf = asymptotic_periodic_acvf(params, a.max_lag);
        meta["params"] = params_json(params);
    } else {
        if (a.input.empty()) throw InvalidArgument("acf needs --input <path.csv> or --asymptotic");
        const PathTable table = read_path_csv(a.input);
        int p = m.p > 0 ? m.p : sidecar_period(a.input);
        if (p == 0) p = *std::max_element(table.season.begin(), table.season.end());
        const int start = table.season.front();
        if (start < 1 || start > p) throw InvalidArgument("season column inconsistent with period");
        AcfOptions options;
        options.centered = a.centered;
        acf = empirical_periodic_acvf(table.x, start, p, a.max_lag, options);
        meta["input"] = a.input;
        meta["period"] = p;
    }
    meta["effective"] = {{"source", a.asymptotic ? "asymptotic" : "empirical"},
                         {"max_lag", a.max_lag},
                         {"centered", a.centered}};

    const int p = acf->period();
    std::string body;
    if (m.format == "json") {
        json seasons = json::array();
        for (int i = 1; i <= p; ++i) seasons.push_back(std::vector<double>(acf->season(i).begin(), acf->season(i).end()));
        body = json{{"source", a.asymptotic ? "asymptotic" : "empirical"},
                    {"first_lag", acf->first_lag()},
                    {"seasons", seasons}}
                   .dump(2) + "\n";
    } else {
        std::ostringstream csv;
        csv << csv_header("h", p);
        for (std::size_t h = acf->first_lag(); h <= acf->max_lag(); ++h) {
            csv << h;
            for (int i = 1; i <= p; ++i) csv << ',' << format_double(acf->at(i, h));
            csv << '\n';
        }
        body = csv.str();
    }
    const Sink sink(m.out, out);
    sink.write(body);
    sink.write_sidecar(meta);
    return 0;
}

int run_converge(const ModelOptions& m, const ConvergeOptions& c,
                 const std::vector<std::string>& args, std::ostream& out) {
    const IndexingMode mode = parse_indexing_mode(m.mode);
    const ConvergenceThresholds thresholds{c.tau, c.floor, c.rho};

    std::vector<SeasonalParams> grid;
    std::vector<std::size_t> checkpoints;
    std::optional<ReferenceGrid> reference;
    if (c.table != 0) {
        reference = reference_grid(c.table);
        if (!reference) throw InvalidArgument("--table must be 1 or 2");
        checkpoints = reference->checkpoints;
        for (const auto& col : reference->columns) grid.emplace_back(std::vector<double>{col.d1, col.d2});
    } else {
        if (m.d.empty()) throw InvalidArgument("converge needs --d or --table");
        grid.push_back(make_params(m));
        checkpoints = parse_count_list(c.checkpoints);
    }

    json cells = json::array();
    json records = json::array();
    std::ostringstream csv;
    csv << "N,d_spec,season,delta,partial_abs_sum,verdict\n";
    for (std::size_t g = 0; g < grid.size(); ++g) {
        const ConvergenceReport report = delta_table(grid[g], checkpoints, mode, thresholds);
        const std::string spec = d_spec(grid[g]);
        const std::string verdict(to_string(report.verdict));
        for (std::size_t n = 0; n < checkpoints.size(); ++n) {
            for (int i = 1; i <= grid[g].period(); ++i) {
                const double delta = report.deltas[static_cast<std::size_t>(i - 1)][n];
                const double sum = report.partial_sums[static_cast<std::size_t>(i - 1)][n];
                csv << checkpoints[n] << ',' << spec << ',' << i << ',' << format_double(delta) << ','
                    << format_double(sum) << ',' << verdict << '\n';
                records.push_back({{"N", checkpoints[n]}, {"d_spec", spec}, {"season", i},
                                   {"delta", delta}, {"partial_abs_sum", sum}, {"verdict", verdict}});
            }
            if (reference) {
                const double published = reference->columns[g].published[n];
                double best = std::numeric_limits<double>::infinity();
                int best_season = 1;
                for (int i = 1; i <= grid[g].period(); ++i) {
                    const double rel =
                        std::fabs(report.deltas[static_cast<std::size_t>(i - 1)][n] / published - 1.0);
                    if (rel < best) {
                        best = rel;
                        best_season = i;
                    }
                }
                cells.push_back({{"N", checkpoints[n]},
                                 {"d_spec", spec},
                                 {"published", published},
                                 {"best_season", best_season},
                                 {"relative_error", best},
                                 {"within_10_percent", best <= 0.10}});
            }
        }
    }

    const Sink sink(m.out, out);
    sink.write(m.format == "json" ? records.dump(2) + "\n" : csv.str());
    json meta = base_meta("converge", args, m);
    meta["effective"] = {{"checkpoints", checkpoints},
                         {"mode", m.mode},
                         {"table", c.table},
                         {"decay_ratio", thresholds.decay_ratio},
                         {"divergence_floor", thresholds.divergence_floor},
                         {"growth_factor", thresholds.growth_factor}};
    if (reference) meta["reference_comparison"] = cells;
    else meta["params"] = params_json(grid.front());
    sink.write_sidecar(meta);
    return 0;
}

std::string one_line(std::string text) {
    std::replace(text.begin(), text.end(), '\n', ' ');
    while (!text.empty() && text.back() == ' ') text.pop_back();
    return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"parfima: periodic fractionally integrated time-series models", "parfima"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    ModelOptions coeffs_model, check_model, sim_model, acf_model, conv_model;
    CoeffsOptions coeffs;
    SimulateOptions sim;
    AcfCliOptions acf;
    ConvergeOptions conv;

    auto* coeffs_cmd = app.add_subcommand("coeffs", "coefficient sequences per season (CSV j,season_1..)");
    add_model_options(*coeffs_cmd, coeffs_model);
    coeffs_cmd->add_option("--kind", coeffs.kind, "pi | psi | big-pi | big-psi")
        ->check(CLI::IsMember({"pi", "psi", "big-pi", "big-psi"}));
    coeffs_cmd->add_option("--n", coeffs.n, "highest coefficient index");

    auto* check_cmd = app.add_subcommand("check", "invertibility / causality classification (JSON)");
    add_model_options(*check_cmd, check_model);

    auto* sim_cmd = app.add_subcommand("simulate", "simulate a sample path (CSV t,season,x,epsilon)");
    add_model_options(*sim_cmd, sim_model);
    sim_cmd->add_option("--n", sim.n, "reported path length");
    sim_cmd->add_option("--seed", sim.seed, "generator seed");
    sim_cmd->add_option("--truncation", sim.truncation, "MA truncation lag M");
    sim_cmd->add_option("--burn-in", sim.burn_in, "discarded draws (default: truncation)");
    sim_cmd->add_option("--start-season", sim.start_season, "season of the first reported value");
    sim_cmd->add_option("--filter-length", sim.filter_length,
                        "also recover innovations with an AR filter of this length (epsilon_hat column)");

    auto* acf_cmd = app.add_subcommand("acf", "periodic autocovariances (CSV h,season_1..)");
    add_model_options(*acf_cmd, acf_model, false);
    acf_cmd->add_flag("--asymptotic", acf.asymptotic, "closed-form long-lag covariances");
    acf_cmd->add_option("--input", acf.input, "path CSV written by simulate");
    acf_cmd->add_option("--max-lag", acf.max_lag, "largest lag");
    acf_cmd->add_flag("--centered", acf.centered, "subtract per-season sample means");

    auto* conv_cmd = app.add_subcommand("converge", "successive-difference diagnostics of big-pi");
    add_model_options(*conv_cmd, conv_model, false);
    conv_cmd->add_option("--N", conv.checkpoints, "checkpoints, comma-separated");
    conv_cmd->add_option("--table", conv.table, "canned grid: 1 (invertible) or 2 (non-invertible)");
    conv_cmd->add_option("--tau", conv.tau, "decay ratio for CONVERGENT");
    conv_cmd->add_option("--floor", conv.floor, "final-delta floor for DIVERGENT");
    conv_cmd->add_option("--rho", conv.rho, "partial-sum growth factor for DIVERGENT");

    std::vector<std::string> argv_storage = {"parfima"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: usage: " << one_line(e.what()) << '\n';
        return 2;
    }

    try {
        if (coeffs_cmd->parsed()) return run_coeffs(coeffs_model, coeffs, args, out);
        if (check_cmd->parsed()) return run_check(check_model, args, out);
        if (sim_cmd->parsed()) return run_simulate(sim_model, sim, args, out);
        if (acf_cmd->parsed()) return run_acf(acf_model, acf, args, out);
        if (conv_cmd->parsed()) return run_converge(conv_model, conv, args, out);
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << one_line(e.what()) << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: internal: " << one_line(e.what()) << '\n';
        return 3;
    }
    return 2;
}

}  // namespace parfima::cli
