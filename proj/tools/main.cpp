// raagprobe: graph predicates, closed-form expectations, and Monte Carlo
// experiments for the finiteness regime of graph-group outer automorphisms.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "raagprobe/detectors.hpp"
#include "raagprobe/enumeration.hpp"
#include "raagprobe/errors.hpp"
#include "raagprobe/experiments.hpp"
#include "raagprobe/formulas.hpp"
#include "raagprobe/graph_io.hpp"
#include "raagprobe/report.hpp"
#include "raagprobe/sampler.hpp"
#include "raagprobe/statistics.hpp"
#include "raagprobe/version.hpp"

namespace {

using namespace raagprobe;

constexpr int kExitAssertion = 1;
constexpr int kExitConfig = 2;

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    out << content;
    if (!out) throw ConfigError("failed writing output file: " + path);
}

struct AnalyzeArgs {
    std::string input;
    std::string format = "text";
    std::size_t max_witnesses = 100;
};

int run_analyze(const AnalyzeArgs& args) {
    Graph g = args.input == "-" ? read_graph(std::cin) : read_graph_file(args.input);
    AnalyzeReport report = analyze_graph(g, args.max_witnesses);
    report.input = args.input;
    std::cout << (args.format == "json" ? render_json(report) : render_text(report));
    return 0;
}

struct SampleArgs {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::int64_t count = 1;
    std::string out_dir = ".";
};

int run_sample(const SampleArgs& args) {
    std::error_code ec;
    std::filesystem::create_directories(args.out_dir, ec);
    if (ec) throw ConfigError("cannot create output directory: " + args.out_dir);
    for (std::int64_t t = 0; t < args.count; ++t) {
        const Graph g = sample_gnp(args.n, args.p, derive_stream(args.seed, static_cast<std::uint64_t>(t)));
        write_graph_file(g, args.out_dir + "/trial_" + std::to_string(t) + ".g");
    }
    std::cout << "wrote " << args.count << " graph files to " << args.out_dir << "\n";
    return 0;
}

struct ExpectArgs {
    int n = 0;
    double p = 0.0;
    std::vector<int> ks;
    double omega = kDefaultRegimeMargin;
    std::string format = "text";
};

int run_expect(const ExpectArgs& args) {
    const char* names[] = {"n",       "p",       "k",       "e_nonadj_dom", "e_adj_dom",
                           "e_diamonds", "e_proper_star_k", "bound_A", "bound_B",
                           "F_env",   "G_env",   "threshold", "regime"};
    std::vector<std::vector<std::string>> rows;
    std::vector<std::optional<int>> kcells;
    if (args.ks.empty()) kcells.push_back(std::nullopt);
    for (int k : args.ks) kcells.push_back(k);
    for (const auto& kcell : kcells) {
        const ExpectationPoint pt = expectation_point(args.n, args.p, kcell);
        std::vector<std::string> row;
        row.push_back(std::to_string(pt.n));
        row.push_back(format_real(pt.p));
        row.push_back(kcell ? std::to_string(*kcell) : "");
        row.push_back(format_real(pt.e_nonadj_dom));
        row.push_back(format_real(pt.e_adj_dom));
        row.push_back(pt.e_diamonds ? format_real(*pt.e_diamonds) : "");
        row.push_back(pt.e_proper_star_k ? format_real(*pt.e_proper_star_k) : "");
        const bool bounds_ok = kcell && args.n >= *kcell + 2;
        row.push_back(bounds_ok ? format_real(star_sep_bound_A(args.n, args.p, *kcell)) : "");
        row.push_back(bounds_ok ? format_real(star_sep_bound_B(args.n, args.p, *kcell)) : "");
        const bool env_ok = kcell && args.n >= 2 * *kcell;
        row.push_back(env_ok ? format_real(highp_envelope_F(*kcell, args.n, 1.0 - args.p)) : "");
        row.push_back(env_ok ? format_real(envelope_G(*kcell, args.n, args.p)) : "");
        row.push_back(args.n >= 3 ? format_real(threshold(args.n)) : "");
        row.push_back(args.n >= 3
                          ? to_string(classify_regime(args.n, args.p, args.omega).regime)
                          : "");
        rows.push_back(std::move(row));
    }
    const std::size_t cols = std::size(names);
    if (args.format == "csv") {
        for (std::size_t c = 0; c < cols; ++c) std::cout << (c ? "," : "") << names[c];
        std::cout << "\n";
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < cols; ++c) std::cout << (c ? "," : "") << row[c];
            std::cout << "\n";
        }
        return 0;
    }
    std::cout << "# omega " << format_real(args.omega) << "\n";
    std::vector<std::size_t> width(cols);
    for (std::size_t c = 0; c < cols; ++c) {
        width[c] = std::string(names[c]).size();
        for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
    }
    auto print_row = [&](auto&& cell_at) {
        for (std::size_t c = 0; c < cols; ++c) {
            const std::string cell = cell_at(c);
            std::cout << cell << std::string(width[c] - cell.size() + (c + 1 < cols ? 2 : 0), ' ');
        }
        std::cout << "\n";
    };
    print_row([&](std::size_t c) { return std::string(names[c]); });
    for (const auto& row : rows) print_row([&](std::size_t c) { return row[c]; });
    return 0;
}

struct SweepArgs {
    std::string config_path;
    std::string out_override;
    int workers = 0;
};

int run_sweep(const SweepArgs& args) {
    SweepConfig config = load_sweep_config(args.config_path);
    if (!args.out_override.empty()) config.output = args.out_override;
    if (config.output.empty())
        throw ConfigError("no output path: set \"output\" in the config or pass --out");
    const std::vector<Estimate> rows = threshold_sweep(config, args.workers);
    write_file(config.output, sweep_csv(config, rows));
    std::cout << "wrote " << rows.size() << " rows to " << config.output << "\n";
    return 0;
}

struct AuditArgs {
    BoundAuditConfig config;
};

int run_audit(const AuditArgs& args) {
    const BoundAuditReport report = bound_audit(args.config);
    std::cout << "# raagprobe " << kVersion << " audit\n";
    std::cout << "grid points " << report.points_checked << ", comparisons "
              << report.comparisons << "\n";
    std::cout << "slack min " << format_real(report.min_slack) << ", max "
              << format_real(report.max_slack) << "\n";
    if (report.passed()) {
        std::cout << "all expectation bounds hold\n";
        return 0;
    }
    std::cout << report.violations.size() << " violations\n";
    for (const BoundViolation& v : report.violations)
        std::cout << "VIOLATION " << v.bound << " at n=" << v.n << " p=" << format_real(v.p)
                  << " k=" << v.k << ": expectation " << format_real(v.expectation) << " > bound "
                  << format_real(v.bound_value) << "\n";
    return kExitAssertion;
}

struct FuzzArgs {
    FuzzArgs() {
        config.p = 0.5;
        config.trials = 1000;
    }
    FuzzConfig config;
    std::string out = "fuzz_counterexample.g";
};

int run_fuzz(const FuzzArgs& args) {
    const FuzzReport report = lemma_property_fuzz(args.config);
    std::cout << "# raagprobe " << kVersion << " fuzz\n";
    std::cout << "checked " << report.graphs_checked << " graphs\n";
    if (report.passed) {
        std::cout << "all structural properties hold\n";
        return 0;
    }
    write_graph_file(*report.counterexample, args.out);
    std::cout << "COUNTEREXAMPLE (" << report.failed_check << ") at index "
              << report.counterexample_index << ", graph written to " << args.out << "\n";
    return kExitAssertion;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-group outer automorphism finiteness probes"};
    app.set_version_flag("--version", std::string("raagprobe ") + kVersion);
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    CLI::App* analyze = app.add_subcommand("analyze", "structural report for one graph file");
    analyze->add_option("input", analyze_args.input, "graph file, or - for stdin")->required();
    analyze->add_option("--format", analyze_args.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    analyze->add_option("--max-witnesses", analyze_args.max_witnesses,
                        "cap per witness list (counts stay exact)");

    SampleArgs sample_args;
    CLI::App* sample = app.add_subcommand("sample", "write sampled graphs as text files");
    sample->add_option("--n", sample_args.n, "vertex count")->required();
    sample->add_option("--p", sample_args.p, "edge probability")->required();
    sample->add_option("--seed", sample_args.seed, "master seed");
    sample->add_option("--count", sample_args.count, "number of graphs");
    sample->add_option("--out-dir", sample_args.out_dir, "output directory");

    ExpectArgs expect_args;
    CLI::App* expect = app.add_subcommand("expect", "closed forms, bounds, threshold, regime");
    expect->add_option("--n", expect_args.n, "vertex count")->required();
    expect->add_option("--p", expect_args.p, "edge probability")->required();
    expect->add_option("--k", expect_args.ks, "separation sizes (one row each)");
    expect->add_option("--omega", expect_args.omega, "regime margin");
    expect->add_option("--format", expect_args.format, "text | csv")
        ->check(CLI::IsMember({"text", "csv"}));

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "Monte Carlo sweep from a JSON config");
    sweep->add_option("config", sweep_args.config_path, "JSON sweep config")->required();
    sweep->add_option("--out", sweep_args.out_override, "override the config output path");
    sweep->add_option("--workers", sweep_args.workers, "worker threads (0 = auto)");

    AuditArgs audit_args;
    CLI::App* audit = app.add_subcommand("audit", "expectation-vs-bound grid audit");
    audit->add_option("--n-min", audit_args.config.n_min, "smallest n");
    audit->add_option("--n-max", audit_args.config.n_max, "largest n");
    audit->add_option("--p-min", audit_args.config.p_min, "smallest p");
    audit->add_option("--p-max", audit_args.config.p_max, "largest p");
    audit->add_option("--p-step", audit_args.config.p_step, "p increment");
    audit->add_option("--bound-scale", audit_args.config.bound_scale,
                      "scale bounds before comparing (fault-injection hook)");

    FuzzArgs fuzz_args;
    CLI::App* fuzz = app.add_subcommand("fuzz", "randomized structural property checks");
    fuzz->add_option("--n", fuzz_args.config.n, "vertex count")->required();
    fuzz->add_option("--p", fuzz_args.config.p, "edge probability");
    fuzz->add_option("--trials", fuzz_args.config.trials, "graphs to sample");
    fuzz->add_option("--seed", fuzz_args.config.seed, "master seed");
    fuzz->add_flag("--exhaustive", fuzz_args.config.exhaustive,
                   "enumerate every graph on n vertices instead of sampling");
    fuzz->add_option("--out", fuzz_args.out, "counterexample output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitConfig;
    }

    try {
        if (*analyze) return run_analyze(analyze_args);
        if (*sample) return run_sample(sample_args);
        if (*expect) return run_expect(expect_args);
        if (*sweep) return run_sweep(sweep_args);
        if (*audit) return run_audit(audit_args);
        if (*fuzz) return run_fuzz(fuzz_args);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitAssertion;
    }
    return kExitConfig;
}
