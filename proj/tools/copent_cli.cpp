// copent: copula-entropy normality testing from the command line.
//
//   copent estimate --input data.csv [--k 3]
//   copent mvn-test --input data.csv [--k 3] [--bootstrap 200] [--seed 1] [--method all]
//   copent simulate --experiment exp2 [--grid 1:10:1] [--n 800] [--runs 10] --out results/
//
// Every subcommand also accepts --config <file> with key = value lines named
// after the long flags; flags given on the command line win.
//
// Exit codes: 0 success, 2 invalid input or configuration, 3 numerical failure.

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "copent/baselines.hpp"
#include "copent/ce_test.hpp"
#include "copent/csv_io.hpp"
#include "copent/entropy.hpp"
#include "copent/error.hpp"
#include "copent/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;

int exit_code_for(const copent::Error& e)
{
    return e.is_numerical() ? kExitNumerical : kExitInvalid;
}

std::string p_field(const std::optional<double>& p)
{
    return p ? copent::format_double(*p) : "NA";
}

struct EstimateArgs {
    std::string input;
    std::size_t k = copent::kDefaultNeighbors;
    std::optional<std::uint64_t> jitter_seed;
};

int run_estimate(const EstimateArgs& args)
{
    const auto x = copent::read_data_csv(args.input);
    const auto ce = copent::copula_entropy(x, copent::CopulaEntropyOptions{args.k, args.jitter_seed});
    std::cout << "ce\t" << copent::format_double(ce.value) << '\n';
    return kExitOk;
}

struct TestArgs {
    std::string input;
    std::size_t k = copent::kDefaultNeighbors;
    std::size_t bootstrap = 0;
    std::uint64_t seed = copent::kDefaultSeed;
    std::string method = "all";
};

int run_mvn_test(const TestArgs& args)
{
    const auto x = copent::read_data_csv(args.input);
    const auto methods = copent::parse_methods(args.method);
    int code = kExitOk;
    for (copent::Method m : methods) {
        try {
            switch (m) {
            case copent::Method::Ce: {
                const auto r = args.bootstrap > 0 ? copent::bootstrap_pvalue(x, args.k, args.bootstrap, args.seed)
                                                  : copent::ce_normality_statistic(x, args.k);
                std::cout << "ce\t" << copent::format_double(r.t_ce) << '\t' << p_field(r.p_value) << '\n';
                break;
            }
            case copent::Method::Mardia: {
                const auto r = copent::mardia(x);
                for (const char* name : {"skewness", "kurtosis"}) {
                    std::cout << "mardia." << name << '\t' << copent::format_double(r.statistic(name)) << '\t'
                              << p_field(r.p_value(name)) << '\n';
                }
                break;
            }
            case copent::Method::Hz: {
                const auto r = copent::henze_zirkler(x);
                std::cout << "hz\t" << copent::format_double(r.statistic("hz")) << '\t' << p_field(r.p_value("hz"))
                          << '\n';
                break;
            }
            case copent::Method::Dh: {
                const auto r = copent::doornik_hansen(x);
                std::cout << "dh\t" << copent::format_double(r.statistic("dh")) << '\t' << p_field(r.p_value("dh"))
                          << '\n';
                break;
            }
            case copent::Method::Energy: {
                if (args.bootstrap > 0) {
                    const auto r = copent::energy_test(x, args.bootstrap, args.seed);
                    std::cout << "energy\t" << copent::format_double(r.statistic("energy")) << '\t'
                              << p_field(r.p_value("energy")) << '\n';
                } else {
                    std::cout << "energy\t" << copent::format_double(copent::energy_statistic(x)) << "\tNA\n";
                }
                break;
            }
            }
        } catch (const copent::Error& e) {
            std::cerr << "copent: " << copent::to_string(m) << ": " << e.what() << '\n';
            code = std::max(code, exit_code_for(e));
        }
    }
    return code;
}

struct SimulateArgs {
    std::string experiment = "exp2";
    std::string grid = "1:10:1";
    std::size_t n = 800;
    std::size_t runs = 10;
    std::size_t k = copent::kDefaultNeighbors;
    std::uint64_t seed = copent::kDefaultSeed;
    std::size_t bootstrap = 0;
    std::string methods = "all";
    std::string out;
    int threads = 0;
};

int run_simulate(const SimulateArgs& args)
{
    copent::ExperimentConfig config;
    config.experiment = copent::parse_experiment(args.experiment);
    config.parameter_grid = copent::parse_grid(args.grid);
    config.n = args.n;
    config.runs = args.runs;
    config.k = args.k;
    config.seed = args.seed;
    config.bootstrap_reps = args.bootstrap;
    config.methods = copent::parse_methods(args.methods);
    config.validate();
    if (args.threads > 0) {
        omp_set_num_threads(args.threads);
    }

    std::vector<std::string> errors;
    const auto records = copent::run_experiment(config, &errors);
    for (const auto& e : errors) {
        std::cerr << "copent: " << e << '\n';
    }
    const std::string prefix = copent::to_string(config.experiment);
    const auto csv = copent::emit_csv(records, args.out, prefix);
    const auto plots = copent::emit_plot(records, args.out, prefix);
    std::cout << csv.detail.string() << '\n' << csv.summary.string() << '\n';
    for (const auto& p : plots) {
        std::cout << p.string() << '\n';
    }
    return kExitOk;
}

std::string trim(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

// Reads `key = value` lines ('#' comments and [section] headers ignored) into
// flag form. Quoted values are unquoted.
std::vector<std::string> config_flags(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw copent::IoError("cannot open config file " + path);
    }
    std::vector<std::string> flags;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty() || line.front() == '[') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw copent::InvalidInputError(path + ":" + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') && value.back() == value.front()) {
            value = value.substr(1, value.size() - 2);
        }
        flags.push_back("--" + key);
        flags.push_back(value);
    }
    return flags;
}

// Splices the flags of any --config file in front of the command-line flags,
// so that explicit flags (parsed later, last one wins) override the file.
std::vector<std::string> expand_config(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    if (args.size() < 2) {
        return args;
    }
    std::vector<std::string> from_file;
    std::vector<std::string> rest;
    for (std::size_t i = 2; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            const auto flags = config_flags(args[++i]);
            from_file.insert(from_file.end(), flags.begin(), flags.end());
        } else if (args[i].rfind("--config=", 0) == 0) {
            const auto flags = config_flags(args[i].substr(9));
            from_file.insert(from_file.end(), flags.begin(), flags.end());
        } else {
            rest.push_back(args[i]);
        }
    }
    std::vector<std::string> out{args[0], args[1]};
    out.insert(out.end(), from_file.begin(), from_file.end());
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Copula-entropy multivariate normality testing"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    std::string config_file;  // consumed by expand_config; declared for --help

    EstimateArgs estimate;
    auto* est = app.add_subcommand("estimate", "Estimate the copula entropy of a CSV sample");
    est->add_option("--config", config_file, "key = value file mirroring the flags");
    est->add_option("--input", estimate.input, "CSV file, one observation per row")->required();
    est->add_option("--k", estimate.k, "nearest-neighbour count")->check(CLI::PositiveNumber);
    est->add_option("--jitter-seed", estimate.jitter_seed, "break ties with a seeded 1e-10 jitter");

    TestArgs test;
    auto* mvn = app.add_subcommand("mvn-test", "Test multivariate normality of a CSV sample");
    mvn->add_option("--config", config_file, "key = value file mirroring the flags");
    mvn->add_option("--input", test.input, "CSV file, one observation per row")->required();
    mvn->add_option("--k", test.k, "nearest-neighbour count")->check(CLI::PositiveNumber);
    mvn->add_option("--bootstrap", test.bootstrap, "bootstrap replicates for ce and energy p-values (0 = none)");
    mvn->add_option("--seed", test.seed, "bootstrap seed");
    mvn->add_option("--method", test.method, "ce, mardia, hz, dh, energy, a comma list, or all");

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Run a simulation experiment");
    simulate->add_option("--config", config_file, "key = value file mirroring the flags");
    simulate->add_option("--experiment", sim.experiment, "exp1 or exp2")->check(CLI::IsMember({"exp1", "exp2"}));
    simulate->add_option("--grid", sim.grid, "parameter grid a:b:step or a comma list");
    simulate->add_option("--n", sim.n, "sample size");
    simulate->add_option("--runs", sim.runs, "repetitions per grid point");
    simulate->add_option("--k", sim.k, "nearest-neighbour count")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sim.seed, "master seed");
    simulate->add_option("--bootstrap", sim.bootstrap, "bootstrap replicates for ce and energy p-values (0 = none)");
    simulate->add_option("--methods", sim.methods, "comma list of ce, mardia, hz, dh, energy, or all");
    simulate->add_option("--out", sim.out, "output directory")->required();
    simulate->add_option("--threads", sim.threads, "OpenMP thread count (0 = runtime default)");

    try {
        auto args = expand_config(argc, argv);
        args.erase(args.begin());  // program name
        std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    } catch (const copent::Error& e) {
        std::cerr << "copent: " << e.what() << '\n';
        return exit_code_for(e);
    }

    try {
        if (*est) {
            return run_estimate(estimate);
        }
        if (*mvn) {
            return run_mvn_test(test);
        }
        return run_simulate(sim);
    } catch (const copent::Error& e) {
        std::cerr << "copent: " << copent::to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "copent: " << e.what() << '\n';
        return kExitNumerical;
    }
}
