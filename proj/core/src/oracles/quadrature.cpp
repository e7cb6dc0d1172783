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

#include "pershlab/oracles/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

#include "pershlab/error.hpp"

namespace pershlab::oracles {

namespace {

constexpr int kOrder = 16;

struct Rule {
    std::array<double, kOrder> node{};
    std::array<double, kOrder> weight{};
};

// Legendre roots by Newton iteration from Chebyshev starting points.
Rule make_rule()
{
    Rule rule;
    for (int i = 0; i < kOrder / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (kOrder + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= kOrder; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = kOrder * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.node[i] = -x;
        rule.weight[i] = w;
        rule.node[kOrder - 1 - i] = x;
        rule.weight[kOrder - 1 - i] = w;
    }
    return rule;
}

const Rule& rule()
{
    static const Rule r = make_rule();
    return r;
}

struct Panel {
    double a;
    double b;
    double left;  // GL16 on [a, mid]
    double right; // GL16 on [mid, b]
    double error;
    int depth;

    double value() const { return left + right; }
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel make_panel(const Integrand& f, double a, double b, double whole, int depth)
{
    const double mid = 0.5 * (a + b);
    Panel p{a, b, gauss_legendre16(f, a, mid), gauss_legendre16(f, mid, b), 0.0, depth};
    p.error = std::abs(whole - p.value());
    if (!std::isfinite(p.error)) {
        throw AccuracyError("quadrature: non-finite integrand value", p.error);
    }
    return p;
}

} // namespace

double gauss_legendre16(const Integrand& f, double a, double b)
{
    const Rule& r = rule();
    const double half = 0.5 * (b - a);
    const double centre = 0.5 * (a + b);
    double sum = 0.0;
    for (int i = 0; i < kOrder; ++i) {
        sum += r.weight[i] * f(centre + half * r.node[i]);
    }
    return sum * half;
}

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureOptions& options,
                           std::span<const double> breakpoints)
{
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw ArgumentError("quadrature: interval endpoints must be finite");
    }
    if (a == b) {
        return {};
    }
    if (a > b) {
        QuadratureResult r = integrate(f, b, a, options, breakpoints);
        r.value = -r.value;
        return r;
    }

    std::vector<double> edges{a};
    for (double x : breakpoints) {
        if (x > a && x < b) {
            edges.push_back(x);
        }
    }
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    const double max_width = options.oscillation > 0.0
        ? std::numbers::pi / (4.0 * options.oscillation)
        : std::numeric_limits<double>::infinity();

    std::priority_queue<Panel> open;
    std::vector<Panel> frozen;
    for (std::size_t s = 0; s + 1 < edges.size(); ++s) {
        const double lo = edges[s];
        const double hi = edges[s + 1];
        std::size_t pieces = 1;
        if (std::isfinite(max_width)) {
            pieces = static_cast<std::size_t>(std::ceil((hi - lo) / max_width));
            pieces = std::clamp<std::size_t>(pieces, 1, options.max_panels / 2 + 1);
        }
        for (std::size_t k = 0; k < pieces; ++k) {
            const double pa = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(pieces);
            const double pb = (k + 1 == pieces)
                ? hi
                : lo + (hi - lo) * static_cast<double>(k + 1) / static_cast<double>(pieces);
            open.push(make_panel(f, pa, pb, gauss_legendre16(f, pa, pb), 0));
        }
    }

    auto totals = [&] {
        QuadratureResult r;
        for (const Panel& p : frozen) {
            r.value += p.value();
            r.error += p.error;
        }
        auto copy = open;
        while (!copy.empty()) {
            r.value += copy.top().value();
            r.error += copy.top().error;
            copy.pop();
        }
        return r;
    };

    double value = 0.0;
    double error = 0.0;
    {
        const QuadratureResult t = totals();
        value = t.value;
        error = t.error;
    }
    std::size_t panels = open.size();

    while (!open.empty()) {
        const double tol = std::max(options.abs_tol, options.rel_tol * std::abs(value));
        if (error <= tol) {
            const QuadratureResult t = totals();
            value = t.value;
            error = t.error;
            if (error <= std::max(options.abs_tol, options.rel_tol * std::abs(value))) {
                break;
            }
        }
        if (panels >= options.max_panels) {
            break;
        }
        Panel worst = open.top();
        open.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (worst.depth >= options.max_depth || !(mid > worst.a && mid < worst.b)) {
            frozen.push_back(worst);
            continue;
        }
        Panel lhs = make_panel(f, worst.a, mid, worst.left, worst.depth + 1);
        Panel rhs = make_panel(f, mid, worst.b, worst.right, worst.depth + 1);
        value += lhs.value() + rhs.value() - worst.value();
        error += lhs.error + rhs.error - worst.error;
        open.push(lhs);
        open.push(rhs);
        ++panels;
    }

    const QuadratureResult result = totals();
    const double tol = std::max(options.abs_tol, options.rel_tol * std::abs(result.value));
    if (!(result.error <= tol)) {
        throw AccuracyError("quadrature: tolerance not reached", result.error);
    }
    return result;
}

} // namespace pershlab::oracles
