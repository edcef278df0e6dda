#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

#include "qscatter/io.hpp"

namespace qscatter::io {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 600.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 530.0;
constexpr int kTicks = 5;

constexpr std::array<const char*, 8> kColors = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Short tick label; full precision is in the data files, not the chart.
std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", std::abs(v) < 1e-12 ? 0.0 : v);
    return buf;
}

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string render_svg(const SweepTable& table, const SvgOptions& options) {
    double x_lo = std::numeric_limits<double>::infinity();
    double x_hi = -x_lo;
    double y_lo = x_lo;
    double y_hi = -x_lo;
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.values.size(); ++c) {
            if (!row.ok(c) || !std::isfinite(row.values[c])) continue;
            x_lo = std::min(x_lo, row.x);
            x_hi = std::max(x_hi, row.x);
            y_lo = std::min(y_lo, row.values[c]);
            y_hi = std::max(y_hi, row.values[c]);
        }
    }
    if (!std::isfinite(x_lo)) {
        x_lo = 0.0;
        x_hi = 1.0;
        y_lo = 0.0;
        y_hi = 1.0;
    }
    if (x_hi == x_lo) x_hi = x_lo + 1.0;
    if (y_hi == y_lo) {
        y_lo -= 0.5;
        y_hi += 0.5;
    }
    auto sx = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * (kRight - kLeft); };
    auto sy = [&](double y) { return kBottom - (y - y_lo) / (y_hi - y_lo) * (kBottom - kTop); };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"" + px(kWidth) +
           "\" height=\"" + px(kHeight) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    if (!options.title.empty()) {
        out += "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-size=\"18\">" +
               escape(options.title) + "</text>\n";
    }
    out += "<g stroke=\"black\" fill=\"none\">\n";
    out += "<line x1=\"" + px(kLeft) + "\" y1=\"" + px(kBottom) + "\" x2=\"" + px(kRight) + "\" y2=\"" +
           px(kBottom) + "\"/>\n";
    out += "<line x1=\"" + px(kLeft) + "\" y1=\"" + px(kBottom) + "\" x2=\"" + px(kLeft) + "\" y2=\"" +
           px(kTop) + "\"/>\n";
    out += "</g>\n";

    out += "<g font-size=\"12\">\n";
    for (int i = 0; i < kTicks; ++i) {
        const double fx = x_lo + (x_hi - x_lo) * i / (kTicks - 1);
        const double fy = y_lo + (y_hi - y_lo) * i / (kTicks - 1);
        out += "<line x1=\"" + px(sx(fx)) + "\" y1=\"" + px(kBottom) + "\" x2=\"" + px(sx(fx)) +
               "\" y2=\"" + px(kBottom + 6) + "\" stroke=\"black\"/>\n";
        out += "<text class=\"xtick\" x=\"" + px(sx(fx)) + "\" y=\"" + px(kBottom + 22) +
               "\" text-anchor=\"middle\">" + tick_label(fx) + "</text>\n";
        out += "<line x1=\"" + px(kLeft - 6) + "\" y1=\"" + px(sy(fy)) + "\" x2=\"" + px(kLeft) +
               "\" y2=\"" + px(sy(fy)) + "\" stroke=\"black\"/>\n";
        out += "<text class=\"ytick\" x=\"" + px(kLeft - 10) + "\" y=\"" + px(sy(fy) + 4) +
               "\" text-anchor=\"end\">" + tick_label(fy) + "</text>\n";
    }
    const std::string x_label = options.x_label.empty() ? table.x_name : options.x_label;
    out += "<text x=\"" + px((kLeft + kRight) / 2) + "\" y=\"570\" text-anchor=\"middle\">" +
           escape(x_label) + "</text>\n";
    if (!options.y_label.empty()) {
        out += "<text x=\"20\" y=\"" + px((kTop + kBottom) / 2) +
               "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " + px((kTop + kBottom) / 2) +
               ")\">" + escape(options.y_label) + "</text>\n";
    }
    out += "</g>\n";

    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        const char* color = kColors[c % kColors.size()];
        out += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& row : table.rows) {
            if (c >= row.values.size() || !row.ok(c) || !std::isfinite(row.values[c])) continue;
            if (!first) out += ' ';
            out += px(sx(row.x)) + "," + px(sy(row.values[c]));
            first = false;
        }
        out += "\"/>\n";
        const double ly = kTop + 20.0 * static_cast<double>(c);
        out += "<line x1=\"615\" y1=\"" + px(ly) + "\" x2=\"640\" y2=\"" + px(ly) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\"/>\n";
        out += "<text x=\"646\" y=\"" + px(ly + 4) + "\" font-size=\"12\">" + escape(table.columns[c]) +
               "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace qscatter::io
