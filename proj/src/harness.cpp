#include "copent/harness.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "copent/baselines.hpp"
#include "copent/ce_test.hpp"
#include "copent/csv_io.hpp"
#include "copent/error.hpp"
#include "copent/parallel.hpp"
#include "copent/rng.hpp"

namespace copent {

std::string to_string(Experiment e)
{
    return e == Experiment::Exp1 ? "exp1" : "exp2";
}

std::string to_string(Method m)
{
    switch (m) {
    case Method::Ce: return "ce";
    case Method::Mardia: return "mardia";
    case Method::Hz: return "hz";
    case Method::Dh: return "dh";
    case Method::Energy: return "energy";
    }
    return "unknown";
}

Experiment parse_experiment(const std::string& text)
{
    if (text == "exp1") {
        return Experiment::Exp1;
    }
    if (text == "exp2") {
        return Experiment::Exp2;
    }
    throw InvalidInputError("unknown experiment '" + text + "' (expected exp1 or exp2)");
}

const std::vector<Method>& all_methods()
{
    static const std::vector<Method> methods{Method::Ce, Method::Mardia, Method::Hz, Method::Dh, Method::Energy};
    return methods;
}

Method parse_method(const std::string& text)
{
    for (Method m : all_methods()) {
        if (to_string(m) == text) {
            return m;
        }
    }
    throw InvalidInputError("unknown method '" + text + "' (expected ce, mardia, hz, dh or energy)");
}

std::vector<Method> parse_methods(const std::string& text)
{
    if (text == "all") {
        return all_methods();
    }
    std::vector<bool> chosen(all_methods().size(), false);
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) {
            continue;
        }
        if (item == "all") {
            return all_methods();
        }
        chosen[static_cast<std::size_t>(parse_method(item))] = true;
    }
    // canonical order regardless of how the list was written
    std::vector<Method> methods;
    for (Method m : all_methods()) {
        if (chosen[static_cast<std::size_t>(m)]) {
            methods.push_back(m);
        }
    }
    if (methods.empty()) {
        throw InvalidInputError("no methods selected");
    }
    return methods;
}

std::vector<double> parse_grid(const std::string& text)
{
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        std::vector<double> parts;
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ':')) {
            const auto v = parse_double(item);
            if (!v) {
                throw InvalidInputError("bad grid component '" + item + "'");
            }
            parts.push_back(*v);
        }
        if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) {
            throw InvalidInputError("grid must be a:b:step with a <= b and step > 0");
        }
        const double tolerance = 1e-9 * parts[2];
        for (std::size_t i = 0;; ++i) {
            const double v = parts[0] + static_cast<double>(i) * parts[2];
            if (v > parts[1] + tolerance) {
                break;
            }
            grid.push_back(v);
        }
        return grid;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto v = parse_double(item);
        if (!v) {
            throw InvalidInputError("bad grid value '" + item + "'");
        }
        grid.push_back(*v);
    }
    return grid;
}

void ExperimentConfig::validate() const
{
    if (parameter_grid.empty()) {
        throw InvalidInputError("parameter grid is empty");
    }
    for (std::size_t i = 0; i < parameter_grid.size(); ++i) {
        const double v = parameter_grid[i];
        if (!std::isfinite(v)) {
            throw InvalidInputError("parameter grid contains a non-finite value");
        }
        if (i > 0 && !(v > parameter_grid[i - 1])) {
            throw InvalidInputError("parameter grid must be strictly increasing");
        }
        if (experiment == Experiment::Exp1 && !(v > 0.0)) {
            throw InvalidInputError("exp1 grid values are exponential rates and must be > 0");
        }
        if (experiment == Experiment::Exp2 && !(v >= 1.0)) {
            throw InvalidInputError("exp2 grid values are Gumbel alphas and must be >= 1");
        }
    }
    if (k == 0 || n <= k) {
        throw InvalidInputError("need n > k >= 1");
    }
    if (runs == 0) {
        throw InvalidInputError("runs must be at least 1");
    }
    if (methods.empty()) {
        throw InvalidInputError("no methods selected");
    }
}

void SimulationRecord::summarise()
{
    double sum = 0.0;
    double abs_sum = 0.0;
    std::size_t count = 0;
    for (const auto& s : per_run_statistics) {
        if (s) {
            sum += *s;
            abs_sum += std::abs(*s);
            ++count;
        }
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    mean_statistic = count ? sum / static_cast<double>(count) : nan;
    mean_abs_statistic = count ? abs_sum / static_cast<double>(count) : nan;

    double p_sum = 0.0;
    std::size_t p_count = 0;
    for (const auto& p : per_run_p_values) {
        if (p) {
            p_sum += *p;
            ++p_count;
        }
    }
    mean_p_value = p_count ? std::optional<double>(p_sum / static_cast<double>(p_count)) : std::nullopt;
}

CopulaSpec experiment_copula(Experiment experiment, double parameter)
{
    return experiment == Experiment::Exp1 ? CopulaSpec::gaussian(kExp1CopulaRho) : CopulaSpec::gumbel(parameter);
}

std::vector<MarginalSpec> experiment_marginals(Experiment experiment, double parameter)
{
    const auto normal = MarginalSpec::normal(kNormalMarginalMean, kNormalMarginalSd);
    if (experiment == Experiment::Exp1) {
        return {normal, MarginalSpec::exponential(parameter)};
    }
    return {normal, normal};
}

Matrix experiment_uniforms(const ExperimentConfig& config, std::size_t param_index, std::size_t run_index)
{
    Rng stream = Rng(config.seed).split(param_index).split(run_index);
    return sample_copula(stream, experiment_copula(config.experiment, config.parameter_grid.at(param_index)), config.n);
}

DataMatrix experiment_sample(const ExperimentConfig& config, std::size_t param_index, std::size_t run_index)
{
    const auto u = experiment_uniforms(config, param_index, run_index);
    const auto marginals = experiment_marginals(config.experiment, config.parameter_grid.at(param_index));
    return apply_marginals(u, marginals);
}

namespace {

std::vector<std::string> method_labels(Method m)
{
    if (m == Method::Mardia) {
        return {"mardia.skewness", "mardia.kurtosis"};
    }
    return {to_string(m)};
}

struct Outcome {
    std::optional<double> statistic;
    std::optional<double> p_value;
};

std::vector<Outcome> run_method(Method m, const DataMatrix& x, const ExperimentConfig& config,
                                std::uint64_t method_seed)
{
    switch (m) {
    case Method::Ce: {
        const auto r = config.bootstrap_reps > 0 ? bootstrap_pvalue(x, config.k, config.bootstrap_reps, method_seed)
                                                 : ce_normality_statistic(x, config.k);
        return {{r.t_ce, r.p_value}};
    }
    case Method::Mardia: {
        const auto r = mardia(x);
        return {{r.statistic("skewness"), r.p_value("skewness")}, {r.statistic("kurtosis"), r.p_value("kurtosis")}};
    }
    case Method::Hz: {
        const auto r = henze_zirkler(x);
        return {{r.statistic("hz"), r.p_value("hz")}};
    }
    case Method::Dh: {
        const auto r = doornik_hansen(x);
        return {{r.statistic("dh"), r.p_value("dh")}};
    }
    case Method::Energy: {
        if (config.bootstrap_reps > 0) {
            const auto r = energy_test(x, config.bootstrap_reps, method_seed);
            return {{r.statistic("energy"), r.p_value("energy")}};
        }
        return {{energy_statistic(x), std::nullopt}};
    }
    }
    return {};
}

}  // namespace

std::vector<SimulationRecord> run_experiment(const ExperimentConfig& config, std::vector<std::string>* errors)
{
    config.validate();
    const std::size_t grid = config.parameter_grid.size();
    const std::size_t runs = config.runs;

    std::vector<std::string> labels;
    std::vector<std::size_t> first_label;  // per selected method
    for (Method m : config.methods) {
        first_label.push_back(labels.size());
        for (auto& l : method_labels(m)) {
            labels.push_back(std::move(l));
        }
    }

    // outcomes[task][label], task = p·runs + r
    std::vector<std::vector<Outcome>> outcomes(grid * runs, std::vector<Outcome>(labels.size()));
    std::vector<std::vector<std::string>> messages(grid * runs);

    parallel_for(grid * runs, [&](std::size_t task) {
        const std::size_t p = task / runs;
        const std::size_t r = task % runs;
        const double parameter = config.parameter_grid[p];
        std::optional<DataMatrix> sample;
        try {
            sample = experiment_sample(config, p, r);
        } catch (const std::exception& e) {
            messages[task].push_back(to_string(config.experiment) + " parameter " + format_double(parameter) +
                                     " run " + std::to_string(r) + ": sampling failed: " + e.what());
            return;
        }
        const Rng run_stream = Rng(config.seed).split(p).split(r);
        for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
            const Method m = config.methods[mi];
            const std::uint64_t method_seed = run_stream.split(1000 + static_cast<std::uint64_t>(m)).key();
            try {
                const auto result = run_method(m, *sample, config, method_seed);
                for (std::size_t j = 0; j < result.size(); ++j) {
                    outcomes[task][first_label[mi] + j] = result[j];
                }
            } catch (const std::exception& e) {
                messages[task].push_back(to_string(m) + " at parameter " + format_double(parameter) + " run " +
                                         std::to_string(r) + ": " + e.what());
            }
        }
    });

    if (errors) {
        for (auto& list : messages) {
            for (auto& msg : list) {
                errors->push_back(std::move(msg));
            }
        }
    }

    std::vector<SimulationRecord> records;
    records.reserve(labels.size() * grid);
    for (std::size_t l = 0; l < labels.size(); ++l) {
        for (std::size_t p = 0; p < grid; ++p) {
            SimulationRecord rec;
            rec.method = labels[l];
            rec.parameter = config.parameter_grid[p];
            for (std::size_t r = 0; r < runs; ++r) {
                const Outcome& o = outcomes[p * runs + r][l];
                rec.per_run_statistics.push_back(o.statistic);
                rec.per_run_p_values.push_back(o.p_value);
            }
            rec.summarise();
            records.push_back(std::move(rec));
        }
    }
    return records;
}

namespace {

std::string optional_field(const std::optional<double>& v)
{
    return v ? format_double(*v) : std::string();
}

std::ofstream open_output(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    return out;
}

}  // namespace

CsvOutputs emit_csv(const std::vector<SimulationRecord>& records, const std::filesystem::path& directory,
                    const std::string& prefix)
{
    if (records.empty()) {
        throw InvalidInputError("no records to write");
    }
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec) {
        throw IoError("cannot create " + directory.string() + ": " + ec.message());
    }
    CsvOutputs paths{directory / (prefix + "_detail.csv"), directory / (prefix + "_summary.csv")};

    auto detail = open_output(paths.detail);
    detail << "method,parameter,run,statistic,p_value\n";
    for (const auto& rec : records) {
        for (std::size_t r = 0; r < rec.per_run_statistics.size(); ++r) {
            const auto p = r < rec.per_run_p_values.size() ? rec.per_run_p_values[r] : std::nullopt;
            detail << rec.method << ',' << format_double(rec.parameter) << ',' << r << ','
                   << optional_field(rec.per_run_statistics[r]) << ',' << optional_field(p) << '\n';
        }
    }

    auto summary = open_output(paths.summary);
    summary << "method,parameter,mean_statistic,mean_abs_statistic,mean_p_value\n";
    for (const auto& rec : records) {
        summary << rec.method << ',' << format_double(rec.parameter) << ',' << format_double(rec.mean_statistic)
                << ',' << format_double(rec.mean_abs_statistic) << ',' << optional_field(rec.mean_p_value) << '\n';
    }

    detail.flush();
    summary.flush();
    if (!detail || !summary) {
        throw IoError("write failed under " + directory.string());
    }
    return paths;
}

namespace {

std::vector<std::vector<std::string>> read_rows(const std::filesystem::path& path, const std::string& header)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::string line;
    if (!std::getline(in, line) || line != header) {
        throw InvalidInputError(path.string() + ": unexpected header");
    }
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            rows.push_back(split_csv_line(line));
        }
    }
    return rows;
}

std::optional<double> optional_number(const std::string& field)
{
    if (field.empty()) {
        return std::nullopt;
    }
    const auto v = parse_double(field);
    if (!v) {
        throw InvalidInputError("bad numeric field '" + field + "'");
    }
    return v;
}

}  // namespace

std::vector<SimulationRecord> read_detail_csv(const std::filesystem::path& path)
{
    std::vector<SimulationRecord> records;
    for (const auto& row : read_rows(path, "method,parameter,run,statistic,p_value")) {
        if (row.size() != 5) {
            throw InvalidInputError(path.string() + ": expected 5 fields");
        }
        const double parameter = optional_number(row[1]).value();
        if (records.empty() || records.back().method != row[0] || records.back().parameter != parameter) {
            SimulationRecord rec;
            rec.method = row[0];
            rec.parameter = parameter;
            records.push_back(std::move(rec));
        }
        records.back().per_run_statistics.push_back(optional_number(row[3]));
        records.back().per_run_p_values.push_back(optional_number(row[4]));
    }
    for (auto& rec : records) {
        rec.summarise();
    }
    return records;
}

std::vector<SummaryRow> read_summary_csv(const std::filesystem::path& path)
{
    std::vector<SummaryRow> rows;
    for (const auto& row : read_rows(path, "method,parameter,mean_statistic,mean_abs_statistic,mean_p_value")) {
        if (row.size() != 5) {
            throw InvalidInputError(path.string() + ": expected 5 fields");
        }
        rows.push_back(SummaryRow{row[0], optional_number(row[1]).value(), optional_number(row[2]).value(),
                                  optional_number(row[3]).value(), optional_number(row[4])});
    }
    return rows;
}

}  // namespace copent
