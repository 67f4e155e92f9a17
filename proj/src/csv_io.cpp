#include "copent/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "copent/error.hpp"

namespace copent {

std::vector<std::string> split_csv_line(std::string_view line)
{
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.emplace_back(line.substr(start));
            break;
        }
        fields.emplace_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

std::optional<double> parse_double(std::string_view field)
{
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) {
        field.remove_prefix(1);
    }
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) {
        field.remove_suffix(1);
    }
    if (!field.empty() && field.front() == '+') {
        field.remove_prefix(1);
    }
    if (field.empty()) {
        return std::nullopt;
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        return std::nullopt;
    }
    return value;
}

DataMatrix parse_data_csv(std::istream& in)
{
    std::vector<double> values;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::string line;
    std::size_t line_no = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        const auto fields = split_csv_line(line);
        std::vector<double> parsed;
        parsed.reserve(fields.size());
        bool numeric = true;
        for (const auto& f : fields) {
            const auto v = parse_double(f);
            if (!v) {
                numeric = false;
                break;
            }
            parsed.push_back(*v);
        }
        if (!numeric) {
            if (first) {
                first = false;
                continue;  // header
            }
            throw InvalidInputError("line " + std::to_string(line_no) + ": non-numeric field");
        }
        first = false;
        if (rows == 0) {
            cols = parsed.size();
        } else if (parsed.size() != cols) {
            throw InvalidInputError("line " + std::to_string(line_no) + ": expected " + std::to_string(cols) +
                                    " fields, got " + std::to_string(parsed.size()));
        }
        values.insert(values.end(), parsed.begin(), parsed.end());
        ++rows;
    }
    if (rows == 0) {
        throw InvalidInputError("no numeric rows in input");
    }
    return DataMatrix(Matrix(rows, cols, std::move(values)));
}

DataMatrix read_data_csv(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    return parse_data_csv(in);
}

std::string format_double(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

}  // namespace copent
