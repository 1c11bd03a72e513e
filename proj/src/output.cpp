#include "swfront/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace swfront::output {

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) throw std::invalid_argument("Table: needs at least one column");
}

void Table::add_row(const std::vector<double>& row) {
    if (row.size() != columns_.size())
        throw std::invalid_argument("Table: row width mismatch");
    rows_.push_back(row);
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void Table::write_csv(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    for (std::size_t c = 0; c < columns_.size(); ++c)
        os << (c ? "," : "") << columns_[c];
    os << "\n";
    for (const auto& r : rows_) {
        for (std::size_t c = 0; c < r.size(); ++c)
            os << (c ? "," : "") << format_g17(r[c]);
        os << "\n";
    }
    if (!os) throw std::runtime_error("write failed: " + path);
}

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

} // namespace

void write_svg(const std::string& path, const std::vector<Curve>& curves,
               const std::string& title, int width, int height) {
    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double y_min = x_min, y_max = -x_min;
    for (const auto& c : curves) {
        for (double v : c.x) { x_min = std::min(x_min, v); x_max = std::max(x_max, v); }
        for (double v : c.y) { y_min = std::min(y_min, v); y_max = std::max(y_max, v); }
    }
    if (!(x_max > x_min)) { x_min -= 1; x_max += 1; }
    if (!(y_max > y_min)) { y_min -= 1; y_max += 1; }
    const double pad_x = 0.04 * (x_max - x_min);
    const double pad_y = 0.08 * (y_max - y_min);
    x_min -= pad_x; x_max += pad_x;
    y_min -= pad_y; y_max += pad_y;

    const int ml = 46, mr = 12, mt = title.empty() ? 12 : 28, mb = 30;
    const double sx = (width - ml - mr) / (x_max - x_min);
    const double sy = (height - mt - mb) / (y_max - y_min);
    auto px = [&](double x) { return ml + (x - x_min) * sx; };
    auto py = [&](double y) { return height - mb - (y - y_min) * sy; };

    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
       << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty())
        os << "<text x=\"" << width / 2 << "\" y=\"18\" text-anchor=\"middle\" "
              "font-family=\"sans-serif\" font-size=\"13\">" << title << "</text>\n";
    // frame and a few ticks
    os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << width - ml - mr
       << "\" height=\"" << height - mt - mb
       << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    char buf[64];
    for (int k = 0; k <= 4; ++k) {
        const double xv = x_min + k * (x_max - x_min) / 4;
        const double yv = y_min + k * (y_max - y_min) / 4;
        std::snprintf(buf, sizeof(buf), "%.3g", xv);
        os << "<text x=\"" << px(xv) << "\" y=\"" << height - mb + 16
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
           << buf << "</text>\n";
        std::snprintf(buf, sizeof(buf), "%.3g", yv);
        os << "<text x=\"" << ml - 5 << "\" y=\"" << py(yv) + 3
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
           << buf << "</text>\n";
    }
    int color = 0;
    int legend_y = mt + 14;
    for (const auto& c : curves) {
        const char* col = kPalette[color++ % 8];
        os << "<polyline fill=\"none\" stroke=\"" << col
           << "\" stroke-width=\"1.4\" points=\"";
        for (std::size_t i = 0; i < c.x.size(); ++i) {
            if (!std::isfinite(c.x[i]) || !std::isfinite(c.y[i])) continue;
            std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px(c.x[i]), py(c.y[i]));
            os << buf;
        }
        os << "\"/>\n";
        if (!c.name.empty()) {
            os << "<text x=\"" << ml + 8 << "\" y=\"" << legend_y
               << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << col
               << "\">" << c.name << "</text>\n";
            legend_y += 14;
        }
    }
    os << "</svg>\n";
    if (!os) throw std::runtime_error("write failed: " + path);
}

} // namespace swfront::output
