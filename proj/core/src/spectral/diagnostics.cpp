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

#include "pershlab/spectral/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pershlab/error.hpp"

namespace pershlab::spectral {

namespace {

void check_grid(std::span<const double> x_grid)
{
    if (x_grid.empty()) {
        throw ArgumentError("diagnostics: x grid is empty");
    }
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        if (!(x_grid[i] > 0.0) || !std::isfinite(x_grid[i])) {
            throw ArgumentError("diagnostics: x grid values must be positive");
        }
        if (i > 0 && !(x_grid[i] < x_grid[i - 1])) {
            throw ArgumentError("diagnostics: x grid must be strictly decreasing");
        }
    }
}

std::vector<std::pair<double, double>> ratio_curve(const SpectralMeasure& measure,
                                                   std::span<const double> x_grid)
{
    check_grid(x_grid);
    std::vector<std::pair<double, double>> curve;
    curve.reserve(x_grid.size());
    for (double x : x_grid) {
        curve.emplace_back(x, mass_ratio(measure, x));
    }
    return curve;
}

} // namespace

std::string to_string(OriginStatus status)
{
    switch (status) {
    case OriginStatus::finite:
        return "finite";
    case OriginStatus::divergent:
        return "divergent";
    case OriginStatus::oscillating:
        return "oscillating";
    }
    return {};
}

double mass_ratio(const SpectralMeasure& measure, double x)
{
    return measure.symmetric_mass(x) / (2.0 * x);
}

OriginDensity classify_origin(std::span<const std::pair<double, double>> curve,
                              const DiagnosticsOptions& options)
{
    if (curve.empty()) {
        throw ArgumentError("classify_origin: empty curve");
    }
    const std::size_t n = curve.size();
    OriginDensity out;

    const std::size_t tail = std::min<std::size_t>(3, n);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = n - tail; i < n; ++i) {
        lo = std::min(lo, curve[i].second);
        hi = std::max(hi, curve[i].second);
    }
    if (hi - lo <= options.finite_tolerance * std::max(std::abs(lo), std::abs(hi))) {
        out.status = OriginStatus::finite;
        out.value = curve.back().second;
        out.liminf = lo;
        out.limsup = hi;
        return out;
    }

    std::vector<double> values;
    for (const auto& [x, v] : curve) {
        values.push_back(v);
    }
    bool increasing = true;
    for (std::size_t i = 1; i < n; ++i) {
        increasing = increasing && values[i] >= values[i - 1];
    }
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    const double median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    if (increasing && values.back() > options.blowup_factor * median) {
        out.status = OriginStatus::divergent;
        out.value = std::numeric_limits<double>::infinity();
        out.liminf = values.back();
        out.limsup = std::numeric_limits<double>::infinity();
        return out;
    }

    out.status = OriginStatus::oscillating;
    out.value = std::numeric_limits<double>::quiet_NaN();
    const auto half = values.begin() + static_cast<std::ptrdiff_t>(n / 2);
    out.liminf = *std::min_element(half, values.end());
    out.limsup = *std::max_element(half, values.end());
    return out;
}

OriginDensity origin_density(const SpectralMeasure& measure, std::span<const double> x_grid,
                             const DiagnosticsOptions& options)
{
    const auto curve = ratio_curve(measure, x_grid);
    return classify_origin(curve, options);
}

double log_moment(const SpectralMeasure& measure, double beta)
{
    if (!(beta >= 0.0) || !std::isfinite(beta)) {
        throw ArgumentError("log_moment: beta must be finite and nonnegative");
    }
    const auto weight = [beta](double l) {
        return std::max(std::pow(std::abs(std::log(l)), 1.0 + beta), 1.0);
    };
    double total = 0.0;
    for (const auto& at : measure.atoms()) {
        if (at.lambda == 0.0) {
            return std::numeric_limits<double>::infinity();
        }
        total += 0.5 * at.mass * weight(at.lambda);
    }
    oracles::QuadratureOptions o;
    o.abs_tol = 1e-12;
    o.rel_tol = 1e-10;
    o.max_depth = 80;
    o.max_panels = 400000;
    const Kernel k{weight, 0.0, o};
    const double e = std::numbers::e;
    for (const auto& p : measure.pieces()) {
        const double edges[] = {p.lo(), std::clamp(1.0 / e, p.lo(), p.hi()),
                                std::clamp(e, p.lo(), p.hi()), p.hi()};
        for (int i = 0; i < 3; ++i) {
            if (edges[i + 1] > edges[i]) {
                total += p.integrate(edges[i], edges[i + 1], k);
            }
        }
    }
    return measure.scale() * total;
}

std::vector<double> default_origin_grid()
{
    std::vector<double> grid;
    for (int i = 4; i <= 24; ++i) {
        grid.push_back(std::pow(10.0, -0.25 * i));
    }
    return grid;
}

MeasureDiagnostics diagnostics(const SpectralMeasure& measure, double beta,
                               std::span<const double> x_grid, const DiagnosticsOptions& options)
{
    MeasureDiagnostics d;
    d.mass_ratio_curve = ratio_curve(measure, x_grid);
    d.origin_density = classify_origin(d.mass_ratio_curve, options);
    d.beta = beta;
    d.log_moment = log_moment(measure, beta);
    return d;
}

} // namespace pershlab::spectral
