// Command-line surface: counting tables, variance tabulation, Monte Carlo
// estimation, and convergence series for binary quantum graphs.

#include "bqg/montecarlo.hpp"
#include "bqg/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace bqg;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitBudget = 4;

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open output file: " + path);
    out << content;
    out.flush();
    if (!out) throw IoFailure("write failed: " + path);
}

// Every file-producing run records its full configuration next to the data.
void write_manifest(const std::string& out_path, const std::string& command, const json& config,
                    const std::string& started, const std::vector<std::string>& outputs) {
    json m;
    m["command"] = command;
    m["version"] = kVersion;
    m["schema_version"] = kSchemaVersion;
    m["config"] = config;
    m["started"] = started;
    m["finished"] = timestamp_utc();
    m["outputs"] = outputs;
    m["notes"]["mean_spacing"] =
        "mean spacing taken as 2*pi/L_total; some conventions use pi/L_total (factor-2 ambiguity)";
    write_file(out_path + ".manifest.json", m.dump(2) + "\n");
}

void emit(const std::string& content, const std::string& out_path, const std::string& command,
          const json& config, const std::string& started) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        write_file(out_path, content);
        write_manifest(out_path, command, config, started, {out_path});
    }
}

Int parse_budget(const std::string& s) {
    return Int(s);
}

// ---------------------------------------------------------------------------

int run_count(int p, int n_max, const std::string& format, const std::string& out_path) {
    const std::string started = timestamp_utc();
    const Rat cp = orbits::c_constant(p);
    std::string csv = "n,lyndon,po,ppo,cp\n";
    json rows = json::array();
    for (int n = 1; n <= n_max; ++n) {
        const Int l2 = words::count_lyndon(2, n);
        const Int po = orbits::count_po(p, n);
        const Int ppo = orbits::count_ppo(p, n);
        csv += std::to_string(n) + "," + l2.str() + "," + po.str() + "," + ppo.str() + "," +
               rat_to_string(cp) + "\n";
        rows.push_back({{"n", n},
                        {"lyndon", l2.str()},
                        {"po", po.str()},
                        {"ppo", ppo.str()},
                        {"cp", rat_to_string(cp)}});
    }
    json config{{"p", p}, {"n_max", n_max}, {"format", format}};
    emit(format == "json" ? rows.dump(2) + "\n" : csv, out_path, "count", config, started);
    return kExitOk;
}

int run_tabulate(int p, int r, int n_max, const std::string& format, const std::string& out_path,
                 const Int& budget) {
    const std::string started = timestamp_utc();
    const auto g = graphs::build_graph(p, r);
    if (n_max > g.num_bonds) throw CLI::ValidationError("tabulate", "n-max exceeds bond count");
    std::vector<report::TabulateRow> rows;
    int max_enc = 1;
    for (int n = 0; n <= n_max; ++n) {
        if (orbits::count_ppo(p, n) > budget)
            throw BudgetExceeded("enumeration at n=" + std::to_string(n) +
                                 " exceeds budget; raise --budget to override");
        const auto ppos = orbits::enumerate_ppo(g, n);
        report::TabulateRow row;
        row.n = n;
        row.sizes = orbits::tabulate_from(ppos);
        row.prediction = variance::value_from_sizes(row.sizes, n);
        row.pairing = variance::pairing_breakdown(g, ppos, n).total;
        row.diagonal = variance::diagonal_contribution(p, n);
        for (const auto& [e, c] : row.sizes.hat_by_n) max_enc = std::max(max_enc, e);
        rows.push_back(std::move(row));
    }
    json config{{"p", p}, {"r", r}, {"n_max", n_max}, {"format", format}, {"budget", budget.str()}};
    emit(format == "json" ? report::tabulate_json(rows).dump(2) + "\n"
                          : report::tabulate_csv(rows, max_enc),
         out_path, "tabulate", config, started);
    return kExitOk;
}

int run_simulate(int p, int r, std::uint64_t samples, std::uint64_t seed, double k_min,
                 double spacings, int threads, const std::string& out_path, const Int& budget) {
    const std::string started = timestamp_utc();
    const auto g = graphs::build_graph(p, r);
    montecarlo::SimulationConfig cfg;
    cfg.seed = seed;
    cfg.samples = samples;
    cfg.k_min = k_min;
    cfg.window_spacings = spacings;
    cfg.threads = threads;
    const auto lengths = montecarlo::sample_lengths(g, seed, cfg.length_lo, cfg.length_hi);
    const auto est = montecarlo::estimate_variance(g, lengths, cfg);

    std::string csv = "n,prediction,estimate,std_error,abs_error,samples\n";
    for (int n = 0; n <= g.num_bonds; ++n) {
        const int m = std::min(n, g.num_bonds - n);
        std::string prediction, abs_error;
        if (orbits::count_ppo(p, m) <= budget) {
            const Rat v = variance::predict_variance(g, n).value;
            prediction = rat_to_string(v);
            const double diff = est.mean[n] - static_cast<double>(v);
            abs_error = report::fmt_double(std::abs(diff));
        }
        csv += std::to_string(n) + "," + prediction + "," + report::fmt_double(est.mean[n]) + "," +
               report::fmt_double(est.std_error[n]) + "," + abs_error + "," +
               std::to_string(samples) + "\n";
    }
    json config{{"p", p},
                {"r", r},
                {"samples", samples},
                {"seed", seed},
                {"k_min", k_min},
                {"window_spacings", spacings},
                {"length_interval", {cfg.length_lo, cfg.length_hi}},
                {"threads", threads},
                {"budget", budget.str()},
                {"mean_spacing", est.mean_spacing},
                {"spacings_covered", est.spacings_covered},
                {"k_max", est.k_max}};
    emit(csv, out_path, "simulate", config, started);
    return kExitOk;
}

int run_convergence(int p, const std::vector<int>& r_list, double ratio, std::uint64_t samples,
                    std::uint64_t seed, int threads, const std::string& out_path,
                    const Int& budget) {
    const std::string started = timestamp_utc();
    montecarlo::SimulationConfig cfg;
    cfg.seed = seed;
    cfg.samples = samples;
    cfg.threads = threads;
    std::vector<montecarlo::ConvergenceRow> rows;
    try {
        rows = montecarlo::convergence_series(p, r_list, ratio, cfg, budget);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("convergence", e.what());
    }
    std::string csv = "r,n,kind,value,std_error\n";
    for (const auto& row : rows) {
        if (row.exact)
            csv += std::to_string(row.r) + "," + std::to_string(row.n) + ",exact," +
                   rat_to_string(row.exact_value) + ",\n";
        else
            csv += std::to_string(row.r) + "," + std::to_string(row.n) + ",estimate," +
                   report::fmt_double(row.estimate) + "," + report::fmt_double(row.std_error) +
                   "\n";
    }
    json config{{"p", p},        {"r_list", r_list},   {"ratio", ratio},
                {"samples", samples}, {"seed", seed},   {"threads", threads},
                {"budget", budget.str()}};
    emit(csv, out_path, "convergence", config, started);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary quantum graph characteristic-polynomial toolkit"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    int threads = 0;
    std::string budget_str = "16777216";  // 2^24 pseudo orbits
    app.add_option("--threads", threads, "worker thread cap (0 = all cores)");
    app.add_option("--budget", budget_str, "max pseudo orbits to enumerate per length");

    auto check_p = CLI::Validator(
        [](std::string& s) {
            int v = std::stoi(s);
            return (v >= 1 && v % 2 == 1) ? std::string{} : std::string{"p must be odd and positive"};
        },
        "ODD");

    // count
    auto* count = app.add_subcommand("count", "exact counting table: Lyndon words, orbits, pseudo orbits");
    int c_p = 1, c_n_max = 8, c_r = -1;
    std::string c_format = "csv", c_out;
    count->add_option("--p", c_p, "family parameter (odd)")->required()->check(check_p);
    count->add_option("--r", c_r, "graph size exponent (unused by counts)");
    count->add_option("--n-max", c_n_max, "largest length")->required()->check(CLI::PositiveNumber);
    count->add_option("--format", c_format)->check(CLI::IsMember({"csv", "json"}));
    count->add_option("--out", c_out, "output file (default stdout)");

    // tabulate
    auto* tab = app.add_subcommand("tabulate", "set sizes, variance prediction, pairing oracle, diagonal");
    int t_p = 1, t_r = 3, t_n_max = 8;
    std::string t_format = "csv", t_out;
    tab->add_option("--p", t_p)->required()->check(check_p);
    tab->add_option("--r", t_r)->required()->check(CLI::NonNegativeNumber);
    tab->add_option("--n-max", t_n_max)->required()->check(CLI::NonNegativeNumber);
    tab->add_option("--format", t_format)->check(CLI::IsMember({"csv", "json"}));
    tab->add_option("--out", t_out);

    // simulate
    auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate of the coefficient variance");
    int s_p = 1, s_r = 3;
    std::uint64_t s_samples = 100000, s_seed = 0;
    double s_k_min = 1000.0, s_spacings = 1e5;
    std::string s_out;
    sim->add_option("--p", s_p)->required()->check(check_p);
    sim->add_option("--r", s_r)->required()->check(CLI::NonNegativeNumber);
    sim->add_option("--samples", s_samples)->required()->check(CLI::PositiveNumber);
    sim->add_option("--seed", s_seed);
    sim->add_option("--k-min", s_k_min);
    sim->add_option("--spacings", s_spacings, "averaging window in mean spacings");
    sim->add_option("--out", s_out);

    // convergence
    auto* conv = app.add_subcommand("convergence", "variance at fixed n/B across a family");
    int v_p = 1;
    std::vector<int> v_r_list;
    double v_ratio = 0.5;
    std::uint64_t v_samples = 100000, v_seed = 0;
    std::string v_out;
    conv->add_option("--p", v_p)->required()->check(check_p);
    conv->add_option("--r-list", v_r_list, "comma separated r values")->required()->delimiter(',');
    conv->add_option("--ratio", v_ratio, "n/B ratio");
    conv->add_option("--samples", v_samples)->check(CLI::PositiveNumber);
    conv->add_option("--seed", v_seed);
    conv->add_option("--out", v_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        const Int budget = parse_budget(budget_str);
        if (count->parsed()) return run_count(c_p, c_n_max, c_format, c_out);
        if (tab->parsed()) return run_tabulate(t_p, t_r, t_n_max, t_format, t_out, budget);
        if (sim->parsed())
            return run_simulate(s_p, s_r, s_samples, s_seed, s_k_min, s_spacings, threads, s_out,
                                budget);
        if (conv->parsed())
            return run_convergence(v_p, v_r_list, v_ratio, v_samples, v_seed, threads, v_out,
                                   budget);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const IoFailure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
