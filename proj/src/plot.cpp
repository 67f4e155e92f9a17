#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "copent/csv_io.hpp"
#include "copent/error.hpp"
#include "copent/harness.hpp"

namespace copent {

std::map<std::string, std::vector<PlotSeries>> plot_series(const std::vector<SimulationRecord>& records)
{
    std::map<std::string, std::vector<PlotSeries>> families;
    for (const auto& rec : records) {
        const std::string family = rec.method.substr(0, rec.method.find('.'));
        auto& series = families[family];
        if (series.empty() || series.back().label != rec.method) {
            series.push_back(PlotSeries{rec.method, {}});
        }
        if (std::isfinite(rec.mean_statistic)) {
            series.back().points.emplace_back(rec.parameter, rec.mean_statistic);
        }
    }
    return families;
}

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 30.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;
constexpr const char* kColours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v)
    {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad()
    {
        if (!(lo < hi)) {
            const double half = lo == 0.0 || !std::isfinite(lo) ? 1.0 : 0.5 * std::abs(lo);
            lo = std::isfinite(lo) ? lo - half : -1.0;
            hi = std::isfinite(hi) ? hi + half : 1.0;
        }
    }
};

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

void write_svg(std::ostream& out, const std::string& title, const std::vector<PlotSeries>& series)
{
    Range xr;
    Range yr;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            xr.add(x);
            yr.add(y);
        }
    }
    xr.pad();
    yr.pad();
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
    auto sy = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * plot_h; };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << kWidth / 2 << "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"18\">" << title << "</text>\n";

    out << "<g stroke=\"black\" stroke-width=\"1\">\n"
        << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w << "\" y2=\""
        << kTop + plot_h << "\"/>\n"
        << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + plot_h
        << "\"/>\n</g>\n";

    out << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    for (int t = 0; t <= 4; ++t) {
        const double xv = xr.lo + (xr.hi - xr.lo) * t / 4.0;
        const double yv = yr.lo + (yr.hi - yr.lo) * t / 4.0;
        out << "<text x=\"" << num(sx(xv)) << "\" y=\"" << num(kTop + plot_h + 18)
            << "\" text-anchor=\"middle\">" << tick_label(xv) << "</text>\n";
        out << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(sy(yv) + 4) << "\" text-anchor=\"end\">"
            << tick_label(yv) << "</text>\n";
    }
    out << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 15
        << "\" text-anchor=\"middle\" font-size=\"13\">parameter</text>\n"
        << "<text x=\"18\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" font-size=\"13\" "
        << "transform=\"rotate(-90 18 " << kTop + plot_h / 2 << ")\">mean statistic</text>\n</g>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* colour = kColours[s % std::size(kColours)];
        out << "<g class=\"series\" data-label=\"" << series[s].label << "\">\n<polyline fill=\"none\" stroke=\""
            << colour << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < series[s].points.size(); ++i) {
            const auto& [x, y] = series[s].points[i];
            out << (i ? " " : "") << num(sx(x)) << ',' << num(sy(y));
        }
        out << "\"/>\n";
        for (const auto& [x, y] : series[s].points) {
            out << "<circle cx=\"" << num(sx(x)) << "\" cy=\"" << num(sy(y)) << "\" r=\"3\" fill=\"" << colour
                << "\" data-x=\"" << format_double(x) << "\" data-y=\"" << format_double(y) << "\"/>\n";
        }
        if (series.size() > 1) {
            out << "<text x=\"" << num(kLeft + plot_w - 150) << "\" y=\"" << num(kTop + 16 + 16 * s)
                << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << colour << "\">" << series[s].label
                << "</text>\n";
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
}

}  // namespace

std::vector<std::filesystem::path> emit_plot(const std::vector<SimulationRecord>& records,
                                             const std::filesystem::path& directory, const std::string& prefix)
{
    if (records.empty()) {
        throw InvalidInputError("no records to plot");
    }
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec) {
        throw IoError("cannot create " + directory.string() + ": " + ec.message());
    }

    // Families in first-appearance order, so file order follows the records.
    std::vector<std::string> order;
    for (const auto& rec : records) {
        const std::string family = rec.method.substr(0, rec.method.find('.'));
        if (std::find(order.begin(), order.end(), family) == order.end()) {
            order.push_back(family);
        }
    }
    const auto families = plot_series(records);

    std::vector<std::filesystem::path> paths;
    for (const auto& family : order) {
        const auto path = directory / (prefix + "_" + family + ".svg");
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot write " + path.string());
        }
        write_svg(out, prefix + ": " + family, families.at(family));
        if (!out) {
            throw IoError("write failed for " + path.string());
        }
        paths.push_back(path);
    }
    return paths;
}

}  // namespace copent
