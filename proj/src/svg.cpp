#include "gdplab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace gdplab {

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 420;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 50;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b"};

std::string number_label(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

std::string coordinate(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", value);
    return buffer;
}

} // namespace

void write_line_chart(std::ostream& out, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      std::span<const ChartSeries> series) {
    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    bool seeded = false;
    for (const ChartSeries& one : series) {
        if (one.x.size() != one.y.size())
            throw std::invalid_argument("chart series " + one.label + ": x/y size mismatch");
        for (std::size_t i = 0; i < one.x.size(); ++i) {
            if (!seeded) {
                x_min = x_max = one.x[i];
                y_min = y_max = one.y[i];
                seeded = true;
            } else {
                x_min = std::min(x_min, one.x[i]);
                x_max = std::max(x_max, one.x[i]);
                y_min = std::min(y_min, one.y[i]);
                y_max = std::max(y_max, one.y[i]);
            }
        }
    }
    if (x_max == x_min) x_max = x_min + 1.0;
    if (y_max == y_min) y_max = y_min + 1.0;

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto sx = [&](double x) { return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    auto sy = [&](double y) {
        return kMarginTop + plot_h - (y - y_min) / (y_max - y_min) * plot_h;
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    out << "  <rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    out << "  <text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";

    out << "  <rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\""
        << coordinate(plot_w) << "\" height=\"" << coordinate(plot_h)
        << "\" fill=\"none\" stroke=\"#444\"/>\n";

    // Corner labels are enough for a diagnostic chart.
    out << "  <text x=\"" << kMarginLeft << "\" y=\"" << kHeight - kMarginBottom + 18
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << number_label(x_min) << "</text>\n";
    out << "  <text x=\"" << kWidth - kMarginRight << "\" y=\"" << kHeight - kMarginBottom + 18
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << number_label(x_max) << "</text>\n";
    out << "  <text x=\"" << kMarginLeft - 6 << "\" y=\"" << kHeight - kMarginBottom
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << number_label(y_min) << "</text>\n";
    out << "  <text x=\"" << kMarginLeft - 6 << "\" y=\"" << kMarginTop + 12
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << number_label(y_max) << "</text>\n";
    out << "  <text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << x_label
        << "</text>\n";
    out << "  <text x=\"16\" y=\"" << kHeight / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
        << "transform=\"rotate(-90 16 " << kHeight / 2 << ")\">" << y_label << "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const ChartSeries& one = series[s];
        const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        out << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < one.x.size(); ++i) {
            if (i) out << ' ';
            out << coordinate(sx(one.x[i])) << ',' << coordinate(sy(one.y[i]));
        }
        out << "\"/>\n";

        const int legend_y = kMarginTop + 14 + static_cast<int>(s) * 16;
        out << "  <rect x=\"" << kWidth - kMarginRight - 150 << "\" y=\"" << legend_y - 9
            << "\" width=\"10\" height=\"10\" fill=\"" << color << "\"/>\n";
        out << "  <text x=\"" << kWidth - kMarginRight - 136 << "\" y=\"" << legend_y
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << one.label << "</text>\n";
    }
    out << "</svg>\n";
}

} // namespace gdplab
