// SPDX-License-Identifier: Apache-2.0
#include "leosim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "leosim/csv.hpp"
#include "leosim/util.hpp"

namespace leosim {
namespace {

constexpr int kW = 720, kH = 480;
constexpr int kMarL = 60, kMarR = 20, kMarT = 40, kMarB = 50;

const char* kSeriesColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                               "#ff7f0e", "#8c564b"};

// five viridis anchors, linearly interpolated
void colormap(double t, int& r, int& g, int& b) {
    static const int stops[5][3] = {
        {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}};
    t = std::clamp(t, 0.0, 1.0) * 4.0;
    int i = std::min(3, static_cast<int>(t));
    double f = t - i;
    r = static_cast<int>(std::lround(stops[i][0] + f * (stops[i + 1][0] - stops[i][0])));
    g = static_cast<int>(std::lround(stops[i][1] + f * (stops[i + 1][1] - stops[i][1])));
    b = static_cast<int>(std::lround(stops[i][2] + f * (stops[i + 1][2] - stops[i][2])));
}

std::string label1(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

std::ofstream open_svg(const std::filesystem::path& path, int w, int h) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "svg: cannot open " + path.string());
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
        << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    return out;
}

void axis_text(std::ofstream& out, double x, double y, const std::string& s,
               const char* anchor = "middle") {
    out << "<text x=\"" << x << "\" y=\"" << y << "\" font-family=\"sans-serif\""
        << " font-size=\"12\" text-anchor=\"" << anchor << "\">" << s << "</text>\n";
}

}  // namespace

void write_cdf_svg(const std::filesystem::path& path, const std::string& title,
                   const std::string& x_label, const std::vector<CdfSeries>& series) {
    require(!series.empty(), "svg: no series");
    double lo = 0.0, hi = 1.0;
    bool have = false;
    for (const CdfSeries& s : series)
        for (double v : *s.values_db)
            if (std::isfinite(v)) {
                lo = have ? std::min(lo, v) : v;
                hi = have ? std::max(hi, v) : v;
                have = true;
            }
    require(have, "svg: no finite values to plot");
    if (hi <= lo) hi = lo + 1.0;

    auto px = [&](double v) {
        return kMarL + (v - lo) / (hi - lo) * (kW - kMarL - kMarR);
    };
    auto py = [&](double p) { return kH - kMarB - p * (kH - kMarT - kMarB); };

    std::ofstream out = open_svg(path, kW, kH);
    out << "<rect x=\"" << kMarL << "\" y=\"" << kMarT << "\" width=\""
        << kW - kMarL - kMarR << "\" height=\"" << kH - kMarT - kMarB
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    axis_text(out, kW / 2.0, 20, title);
    axis_text(out, kW / 2.0, kH - 12, x_label);
    for (int i = 0; i <= 4; ++i) {
        double p = i / 4.0;
        double v = lo + p * (hi - lo);
        axis_text(out, px(v), kH - kMarB + 18, format_number(std::round(v * 10) / 10));
        axis_text(out, kMarL - 8, py(p) + 4, format_number(p), "end");
        out << "<line x1=\"" << kMarL << "\" x2=\"" << kW - kMarR << "\" y1=\"" << py(p)
            << "\" y2=\"" << py(p) << "\" stroke=\"#dddddd\"/>\n";
    }
    for (std::size_t si = 0; si < series.size(); ++si) {
        const std::vector<double>& v = *series[si].values_db;
        if (v.empty()) continue;
        out << "<polyline fill=\"none\" stroke=\"" << kSeriesColors[si % 6]
            << "\" stroke-width=\"1.5\" points=\"";
        std::size_t n = v.size();
        std::size_t stride = std::max<std::size_t>(1, n / 512);
        for (std::size_t i = 0; i < n; i += stride) {
            double x = std::clamp(v[i], lo, hi);
            out << px(x) << ',' << py((i + 1.0) / n) << ' ';
        }
        out << "\"/>\n";
        axis_text(out, kW - kMarR - 8, kMarT + 16 + 14 * si, series[si].name, "end");
        out << "<rect x=\"" << kW - kMarR - 90 << "\" y=\"" << kMarT + 8 + 14 * si
            << "\" width=\"10\" height=\"10\" fill=\"" << kSeriesColors[si % 6]
            << "\"/>\n";
    }
    out << "</svg>\n";
}

void write_heatmap_svg(const std::filesystem::path& path, const std::string& title,
                       const HeatmapGrid& grid, const std::vector<GroundPoint>& centers) {
    require(grid.nx > 0 && grid.ny > 0, "svg: empty grid");
    double lo = 0.0, hi = 1.0;
    bool have = false;
    for (double v : grid.values_db)
        if (std::isfinite(v)) {
            lo = have ? std::min(lo, v) : v;
            hi = have ? std::max(hi, v) : v;
            have = true;
        }
    require(have, "svg: no finite values to plot");
    if (hi <= lo) hi = lo + 1.0;

    const int plot = 560;
    const int w = plot + kMarL + 120, h = plot + kMarT + kMarB;
    double cell_w = static_cast<double>(plot) / grid.nx;
    double cell_h = static_cast<double>(plot) / grid.ny;

    std::ofstream out = open_svg(path, w, h);
    axis_text(out, w / 2.0, 20, title);
    for (int iy = 0; iy < grid.ny; ++iy) {
        for (int ix = 0; ix < grid.nx; ++ix) {
            double v = grid.values_db[static_cast<std::size_t>(iy) * grid.nx + ix];
            int r, g, b;
            colormap(std::isfinite(v) ? (v - lo) / (hi - lo) : 1.0, r, g, b);
            // y axis points up in ground coordinates, down in SVG
            out << "<rect x=\"" << kMarL + ix * cell_w << "\" y=\""
                << kMarT + (grid.ny - 1 - iy) * cell_h << "\" width=\"" << cell_w + 0.5
                << "\" height=\"" << cell_h + 0.5 << "\" fill=\"rgb(" << r << ',' << g
                << ',' << b << ")\"/>\n";
        }
    }
    double km_lo_x = grid.x0_m / 1000.0;
    double km_hi_x = grid.x_at(grid.nx - 1) / 1000.0;
    auto px = [&](double xm) {
        return kMarL + (xm - grid.x0_m) / (grid.x_at(grid.nx - 1) - grid.x0_m) * plot;
    };
    auto py = [&](double ym) {
        return kMarT + plot - (ym - grid.y0_m) / (grid.y_at(grid.ny - 1) - grid.y0_m) * plot;
    };
    for (const GroundPoint& c : centers)
        out << "<circle cx=\"" << px(c.x_m) << "\" cy=\"" << py(c.y_m)
            << "\" r=\"3\" fill=\"none\" stroke=\"white\" stroke-width=\"1.5\"/>\n";
    axis_text(out, kMarL, h - 12, label1(km_lo_x) + " km", "start");
    axis_text(out, kMarL + plot, h - 12, label1(km_hi_x) + " km", "end");
    // colorbar
    for (int i = 0; i < 100; ++i) {
        int r, g, b;
        colormap(i / 99.0, r, g, b);
        out << "<rect x=\"" << kMarL + plot + 30 << "\" y=\""
            << kMarT + plot - (i + 1) * plot / 100.0 << "\" width=\"18\" height=\""
            << plot / 100.0 + 0.5 << "\" fill=\"rgb(" << r << ',' << g << ',' << b
            << ")\"/>\n";
    }
    axis_text(out, kMarL + plot + 54, kMarT + plot, label1(lo) + " dB", "start");
    axis_text(out, kMarL + plot + 54, kMarT + 10, label1(hi) + " dB", "start");
    out << "</svg>\n";
}

}  // namespace leosim
