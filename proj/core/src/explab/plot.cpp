/*
   Copyright 2026 The pershlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "pershlab/explab/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <vector>

#include "pershlab/error.hpp"

namespace pershlab::explab {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

struct Point {
    double x;
    double y;
    double lo;
    double hi;
};

struct Series {
    std::string label;
    std::vector<Point> points;
};

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

bool sampled(estimator::EstimateKind k)
{
    return k == estimator::EstimateKind::persistence_sampled ||
           k == estimator::EstimateKind::ball_sampled;
}

std::vector<Series> group(const Report& report)
{
    std::vector<Series> out;
    std::map<std::string, std::size_t> index;
    for (const auto& r : report.rows) {
        const std::string label = series_of(r) + " level=" + format_number(r.level);
        auto [it, fresh] = index.emplace(label, out.size());
        if (fresh) {
            out.push_back({label, {}});
        }
        const double x = sampled(r.kind) ? r.delta : r.horizon;
        if (std::isfinite(x) && std::isfinite(r.theta_hat)) {
            out[it->second].points.push_back({x, r.theta_hat, r.theta_lo, r.theta_hi});
        }
    }
    for (auto& s : out) {
        std::stable_sort(s.points.begin(), s.points.end(),
                         [](const Point& a, const Point& b) { return a.x < b.x; });
    }
    return out;
}

} // namespace

std::string render_svg(const Report& report, const PlotStyle& style)
{
    if (report.rows.empty()) {
        throw ArgumentError("plot: report has no rows");
    }
    const auto series = group(report);

    double x0 = std::numeric_limits<double>::infinity();
    double x1 = -x0;
    double y0 = x0;
    double y1 = -x0;
    for (const auto& s : series) {
        for (const auto& p : s.points) {
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            for (double y : {p.y, p.lo, p.hi}) {
                if (std::isfinite(y)) {
                    y0 = std::min(y0, y);
                    y1 = std::max(y1, y);
                }
            }
        }
    }
    if (!std::isfinite(x0)) {
        x0 = 0.0;
        x1 = 1.0;
        y0 = 0.0;
        y1 = 1.0;
    }
    if (!(x1 > x0)) {
        x0 -= 0.5;
        x1 += 0.5;
    }
    if (!(y1 > y0)) {
        y0 -= 0.5;
        y1 += 0.5;
    }
    const double pad = 0.05 * (y1 - y0);
    y0 -= pad;
    y1 += pad;

    const double w = style.width;
    const double h = style.height;
    const double left = 70.0;
    const double right = 190.0;
    const double top = 40.0;
    const double bottom = 50.0;
    const double pw = w - left - right;
    const double ph = h - top - bottom;
    const auto sx = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
    const auto sy = [&](double y) {
        const double c = std::clamp(y, y0, y1);
        return top + (y1 - c) / (y1 - y0) * ph;
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\""
        << style.height << "\" viewBox=\"0 0 " << style.width << ' ' << style.height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    const std::string title = style.title.empty() ? report.experiment : style.title;
    out << "<text x=\"" << fmt(w / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
        << escape(title) << "</text>\n";
    out << "<rect x=\"" << fmt(left) << "\" y=\"" << fmt(top) << "\" width=\"" << fmt(pw)
        << "\" height=\"" << fmt(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = x0 + (x1 - x0) * i / 4.0;
        const double yv = y0 + (y1 - y0) * i / 4.0;
        out << "<text x=\"" << fmt(sx(xv)) << "\" y=\"" << fmt(top + ph + 18)
            << "\" text-anchor=\"middle\" font-size=\"11\">" << tick(xv) << "</text>\n";
        out << "<text x=\"" << fmt(left - 6) << "\" y=\"" << fmt(sy(yv) + 4)
            << "\" text-anchor=\"end\" font-size=\"11\">" << tick(yv) << "</text>\n";
    }
    const bool by_delta = std::all_of(report.rows.begin(), report.rows.end(),
                                      [](const auto& r) { return sampled(r.kind); });
    out << "<text x=\"" << fmt(left + pw / 2) << "\" y=\"" << fmt(h - 10)
        << "\" text-anchor=\"middle\" font-size=\"12\">" << (by_delta ? "delta" : "T")
        << "</text>\n";
    out << "<text x=\"16\" y=\"" << fmt(top + ph / 2) << "\" font-size=\"12\" transform=\"rotate(-90 16 "
        << fmt(top + ph / 2) << ")\" text-anchor=\"middle\">theta_hat</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* color = kPalette[k % std::size(kPalette)];
        const double ly = top + 16.0 * static_cast<double>(k) + 8.0;
        out << "<line x1=\"" << fmt(w - right + 10) << "\" y1=\"" << fmt(ly) << "\" x2=\""
            << fmt(w - right + 30) << "\" y2=\"" << fmt(ly) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << fmt(w - right + 36) << "\" y=\"" << fmt(ly + 4)
            << "\" font-size=\"11\">" << escape(s.label) << "</text>\n";
        if (s.points.empty()) {
            continue;
        }
        if (s.points.size() == 1) {
            const auto& p = s.points.front();
            out << "<line x1=\"" << fmt(sx(p.x)) << "\" y1=\"" << fmt(sy(p.lo)) << "\" x2=\""
                << fmt(sx(p.x)) << "\" y2=\"" << fmt(sy(p.hi)) << "\" stroke=\"" << color
                << "\"/>\n";
            out << "<circle cx=\"" << fmt(sx(p.x)) << "\" cy=\"" << fmt(sy(p.y))
                << "\" r=\"4\" fill=\"" << color << "\"/>\n";
            continue;
        }
        std::string band;
        for (const auto& p : s.points) {
            band += fmt(sx(p.x)) + "," + fmt(sy(std::isnan(p.hi) ? p.y : p.hi)) + " ";
        }
        for (auto it = s.points.rbegin(); it != s.points.rend(); ++it) {
            band += fmt(sx(it->x)) + "," + fmt(sy(std::isnan(it->lo) ? it->y : it->lo)) + " ";
        }
        band.pop_back();
        out << "<polygon points=\"" << band << "\" fill=\"" << color
            << "\" fill-opacity=\"0.2\" stroke=\"none\"/>\n";
        std::string line;
        for (const auto& p : s.points) {
            line += fmt(sx(p.x)) + "," + fmt(sy(p.y)) + " ";
        }
        line.pop_back();
        out << "<polyline points=\"" << line << "\" fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        for (const auto& p : s.points) {
            out << "<circle cx=\"" << fmt(sx(p.x)) << "\" cy=\"" << fmt(sy(p.y))
                << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

void emit_plot(const Report& report, const std::filesystem::path& file, const PlotStyle& style)
{
    const std::string svg = render_svg(report, style);
    if (file.has_parent_path()) {
        std::filesystem::create_directories(file.parent_path());
    }
    std::ofstream out(file, std::ios::binary);
    out << svg;
    if (!out) {
        throw ArgumentError("cannot write " + file.string());
    }
}

} // namespace pershlab::explab
