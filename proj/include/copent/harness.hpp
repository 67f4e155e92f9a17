#pragma once

// Simulation runner for the two bivariate experiments:
//
//   exp1: Gaussian copula ρ = 0.8, marginals normal(0, 2) and exponential(rate),
//         rate over the grid (default 1..10).
//   exp2: Gumbel copula α over the grid (default 1..10), marginals
//         normal(0, 2) and normal(0, 2).
//
// Every selected method runs on the same sample for each (parameter, run).
// The sample for grid index p and run r is drawn from
// Rng(seed).split(p).split(r); a method needing its own random stream (the
// bootstraps) gets the seed Rng(seed).split(p).split(r).split(1000 + m).key()
// with m the method's position in {ce, mardia, hz, dh, energy}.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "copent/matrix.hpp"
#include "copent/samplers.hpp"

namespace copent {

enum class Experiment { Exp1, Exp2 };
enum class Method { Ce, Mardia, Hz, Dh, Energy };

std::string to_string(Experiment e);
std::string to_string(Method m);
Experiment parse_experiment(const std::string& text);
Method parse_method(const std::string& text);
/// Comma-separated list; "all" selects every method.
std::vector<Method> parse_methods(const std::string& text);
const std::vector<Method>& all_methods();

inline constexpr double kExp1CopulaRho = 0.8;
inline constexpr double kNormalMarginalMean = 0.0;
inline constexpr double kNormalMarginalSd = 2.0;
inline constexpr std::uint64_t kDefaultSeed = 20240517;

struct ExperimentConfig {
    Experiment experiment = Experiment::Exp2;
    std::vector<double> parameter_grid{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::size_t n = 800;
    std::size_t runs = 10;
    std::size_t k = 3;
    std::uint64_t seed = kDefaultSeed;
    std::size_t bootstrap_reps = 0;
    std::vector<Method> methods = all_methods();

    /// Throws InvalidInputError when an invariant does not hold.
    void validate() const;
};

/// Parses "a:b:step" (inclusive of b up to rounding) or a comma list.
std::vector<double> parse_grid(const std::string& text);

struct SimulationRecord {
    std::string method;  ///< e.g. "ce", "hz", "mardia.skewness"
    double parameter = 0.0;
    std::vector<std::optional<double>> per_run_statistics;  ///< nullopt marks a failed run
    std::vector<std::optional<double>> per_run_p_values;
    double mean_statistic = 0.0;      ///< over successful runs; NaN if none
    double mean_abs_statistic = 0.0;
    std::optional<double> mean_p_value;

    /// Recomputes the mean fields from the per-run values.
    void summarise();
};

/// Copula sample for grid index p and run r.
Matrix experiment_uniforms(const ExperimentConfig& config, std::size_t param_index, std::size_t run_index);
std::vector<MarginalSpec> experiment_marginals(Experiment experiment, double parameter);
CopulaSpec experiment_copula(Experiment experiment, double parameter);
DataMatrix experiment_sample(const ExperimentConfig& config, std::size_t param_index, std::size_t run_index);

/// One record per (statistic, parameter), ordered by method, statistic name
/// and then grid order. Method failures are logged to `errors` (if given)
/// and leave a missing run; they never abort the grid.
std::vector<SimulationRecord> run_experiment(const ExperimentConfig& config,
                                             std::vector<std::string>* errors = nullptr);

struct CsvOutputs {
    std::filesystem::path detail;
    std::filesystem::path summary;
};

/// Writes `<prefix>_detail.csv` (method,parameter,run,statistic,p_value) and
/// `<prefix>_summary.csv` (method,parameter,mean_statistic,mean_abs_statistic,mean_p_value).
CsvOutputs emit_csv(const std::vector<SimulationRecord>& records, const std::filesystem::path& directory,
                    const std::string& prefix);

/// Rebuilds records from a detail CSV.
std::vector<SimulationRecord> read_detail_csv(const std::filesystem::path& path);

struct SummaryRow {
    std::string method;
    double parameter;
    double mean_statistic;
    double mean_abs_statistic;
    std::optional<double> mean_p_value;
};
std::vector<SummaryRow> read_summary_csv(const std::filesystem::path& path);

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;  ///< (parameter, mean statistic)
};

/// Series grouped by method family (text before the first '.'), in record order.
std::map<std::string, std::vector<PlotSeries>> plot_series(const std::vector<SimulationRecord>& records);

/// One SVG per method family, `<prefix>_<method>.svg`. Returns the paths.
std::vector<std::filesystem::path> emit_plot(const std::vector<SimulationRecord>& records,
                                             const std::filesystem::path& directory, const std::string& prefix);

}  // namespace copent
