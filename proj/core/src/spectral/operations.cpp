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

#include "pershlab/spectral/operations.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <functional>
#include <memory>
#include <numbers>

#include "pershlab/error.hpp"
#include "pershlab/oracles/quadrature.hpp"
#include "pershlab/spectral/diagnostics.hpp"

namespace pershlab::spectral {

namespace {

constexpr double kPi = std::numbers::pi;

struct BoxSegment {
    double lo;
    double hi;
    double height;
};

// Height of a piece that folds in closed form, or a negative value.
double box_height(const DensityPiece& p)
{
    if (!p.multipliers().empty()) {
        return -1.0;
    }
    if (const auto* b = std::get_if<family::Box>(&p.family())) {
        return b->height * p.weight();
    }
    if (std::holds_alternative<family::SincBox>(p.family())) {
        return p.weight() / (2.0 * kPi);
    }
    return -1.0;
}

void add_segment(std::vector<BoxSegment>& out, double lo, double hi, double height)
{
    if (!(hi > lo) || height == 0.0) {
        return;
    }
    for (auto& s : out) {
        if (s.lo == lo && s.hi == hi) {
            s.height += height;
            return;
        }
    }
    out.push_back({lo, hi, height});
}

struct SignedPiece {
    const DensityPiece* piece;
    double factor;
};

std::vector<SignedPiece> cancelled_difference(const SpectralMeasure& a, const SpectralMeasure& b)
{
    std::vector<DensityPiece> left;
    std::vector<DensityPiece> right;
    for (const auto& p : a.pieces()) {
        left.push_back(p.scaled(a.scale()));
    }
    for (const auto& p : b.pieces()) {
        right.push_back(p.scaled(b.scale()));
    }
    std::vector<bool> used(right.size(), false);
    std::vector<SignedPiece> out;
    for (std::size_t i = 0; i < a.pieces().size(); ++i) {
        bool matched = false;
        for (std::size_t j = 0; j < right.size() && !matched; ++j) {
            if (!used[j] && left[i].same_as(right[j])) {
                used[j] = true;
                matched = true;
            }
        }
        if (!matched) {
            out.push_back({&a.pieces()[i], a.scale()});
        }
    }
    for (std::size_t j = 0; j < right.size(); ++j) {
        if (!used[j]) {
            out.push_back({&b.pieces()[j], -b.scale()});
        }
    }
    return out;
}

// Integral of g over [p, q], removing inverse square-root endpoint
// singularities by l = p + s^2 or l = q - s^2.
double singular_aware_integral(const std::function<double(double)>& g, double p, double q,
                               bool sing_p, bool sing_q, const oracles::QuadratureOptions& o)
{
    if (sing_p && sing_q) {
        const double m = 0.5 * (p + q);
        return singular_aware_integral(g, p, m, true, false, o) +
               singular_aware_integral(g, m, q, false, true, o);
    }
    if (sing_q) {
        const auto f = [&g, q](double s) { return 2.0 * s * g(q - s * s); };
        return oracles::integrate(f, 0.0, std::sqrt(q - p), o).value;
    }
    if (sing_p) {
        const auto f = [&g, p](double s) { return 2.0 * s * g(p + s * s); };
        return oracles::integrate(f, 0.0, std::sqrt(q - p), o).value;
    }
    return oracles::integrate(g, p, q, o).value;
}

// True for a piece whose density oscillates like cos(1/l) as l -> 0.
bool oscillates_at_origin(const DensityPiece& p)
{
    const auto* c = std::get_if<family::Counterexample>(&p.family());
    return c != nullptr && c->mode == Oscillation::reciprocal && p.lo() == 0.0 && !p.empty();
}

// Integral of g over [0, q] when g carries a cos(1/l) factor. With u = 1/l
// the integrand is periodic-like in u; whole periods are integrated up to
// kCellEnd and the rest uses one period average as the limiting density.
double origin_oscillation_integral(const std::function<double(double)>& g, double q,
                                   const oracles::QuadratureOptions& o)
{
    constexpr double kCellEnd = 2e5;
    const auto f = [&g](double u) { return g(1.0 / u) / (u * u); };
    double total = 0.0;
    double u = 1.0 / q;
    while (u < kCellEnd) {
        const double next = std::min(u + 2.0 * kPi, kCellEnd);
        total += oracles::integrate(f, u, next, o).value;
        u = next;
    }
    const auto cell = [&g](double v) { return g(1.0 / v); };
    const double mean = oracles::integrate(cell, kCellEnd, kCellEnd + 2.0 * kPi, o).value / (2.0 * kPi);
    return total + mean / kCellEnd;
}

} // namespace

double covariance(const SpectralMeasure& measure, double t)
{
    return measure.covariance(t);
}

SpectralMeasure fold(const SpectralMeasure& measure, double delta)
{
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw ArgumentError("fold: delta must be positive");
    }
    const double period = 2.0 * kPi / delta;
    const double half = kPi / delta;

    std::vector<DensityPiece> pieces;
    std::vector<BoxSegment> boxes;
    for (const auto& p : measure.pieces()) {
        if (!std::isfinite(p.hi())) {
            throw UnsupportedError("fold: piece '" + p.family_name() + "' has unbounded support");
        }
        const double h = box_height(p);
        if (h >= 0.0) {
            add_segment(boxes, std::max(p.lo(), 0.0), std::min(p.hi(), half), h);
        } else if (p.lo() < half) {
            pieces.push_back(p.restricted(0.0, half));
        }
        if (p.hi() <= half) {
            continue;
        }
        const auto base = std::make_shared<const DensityPiece>(p);
        for (int n = 1; (2.0 * n - 1.0) * half < p.hi(); ++n) {
            const double s = n * period;
            if (!(s + half > p.lo())) {
                continue;
            }
            if (h >= 0.0) {
                // w(s + l) on l in [lo - s, hi - s]; w(s - l) on l in [s - hi, s - lo]
                add_segment(boxes, std::max(0.0, p.lo() - s), std::min(half, p.hi() - s), h);
                add_segment(boxes, std::max(0.0, s - p.hi()), std::min(half, s - p.lo()), h);
            } else {
                pieces.push_back(DensityPiece::folded(base, s, half));
            }
        }
    }
    std::vector<DensityPiece> out;
    for (const auto& b : boxes) {
        out.push_back(DensityPiece::box(b.height, b.lo, b.hi));
    }
    for (auto& p : pieces) {
        out.push_back(std::move(p));
    }

    std::vector<Atom> atoms;
    for (const auto& a : measure.atoms()) {
        const double l = std::abs(std::remainder(a.lambda, period));
        auto it = std::find_if(atoms.begin(), atoms.end(), [l](const Atom& x) { return x.lambda == l; });
        if (it != atoms.end()) {
            it->mass += a.mass;
        } else {
            atoms.push_back({l, a.mass});
        }
    }
    const std::string name = measure.name().empty() ? std::string() : measure.name() + "_folded";
    return {std::move(out), std::move(atoms), measure.scale(), name};
}

SpectralMeasure restrict(const SpectralMeasure& measure, double cutoff)
{
    if (!(cutoff > 0.0) || std::isnan(cutoff)) {
        throw ArgumentError("restrict: cutoff must be positive");
    }
    std::vector<DensityPiece> pieces;
    for (const auto& p : measure.pieces()) {
        pieces.push_back(p.restricted(0.0, cutoff));
    }
    std::vector<Atom> atoms;
    for (const auto& a : measure.atoms()) {
        if (a.lambda <= cutoff) {
            atoms.push_back(a);
        }
    }
    return {std::move(pieces), std::move(atoms), measure.scale(), measure.name()};
}

SpectralMeasure apply_multiplier(const SpectralMeasure& measure, const Multiplier& h)
{
    if (h.kind() == Multiplier::Kind::constant) {
        const double c = h.parameter();
        return {measure.pieces(), measure.atoms(), measure.scale() * c * c, measure.name()};
    }
    std::vector<DensityPiece> pieces;
    for (const auto& p : measure.pieces()) {
        pieces.push_back(p.with_multiplier(h));
    }
    std::vector<Atom> atoms;
    for (const auto& a : measure.atoms()) {
        atoms.push_back({a.lambda, a.mass * h.squared(a.lambda)});
    }
    return {std::move(pieces), std::move(atoms), measure.scale(), measure.name()};
}

SpectralMeasure apply_multiplier(const SpectralMeasure& measure, std::string_view tag,
                                 double parameter)
{
    return apply_multiplier(measure, Multiplier::from_tag(tag, parameter));
}

SpectralMeasure add(const SpectralMeasure& a, const SpectralMeasure& b)
{
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    std::vector<DensityPiece> pieces;
    std::vector<Atom> atoms;
    const bool same_scale = a.scale() == b.scale();
    for (const auto* m : {&a, &b}) {
        const double c = same_scale ? 1.0 : m->scale();
        for (const auto& p : m->pieces()) {
            pieces.push_back(same_scale ? p : p.scaled(c));
        }
        for (const auto& at : m->atoms()) {
            atoms.push_back({at.lambda, at.mass * c});
        }
    }
    return {std::move(pieces), std::move(atoms), same_scale ? a.scale() : 1.0};
}

SpectralMeasure scale(const SpectralMeasure& measure, double c)
{
    if (!(c >= 0.0) || !std::isfinite(c)) {
        throw ArgumentError("scale: factor must be finite and nonnegative");
    }
    return {measure.pieces(), measure.atoms(), measure.scale() * c, measure.name()};
}

double tv_distance(const SpectralMeasure& a, const SpectralMeasure& b)
{
    double positive = 0.0;
    double negative = 0.0;

    std::map<double, double> atom_diff;
    for (const auto& at : a.atoms()) {
        atom_diff[at.lambda] += a.scale() * at.mass;
    }
    for (const auto& at : b.atoms()) {
        atom_diff[at.lambda] -= b.scale() * at.mass;
    }
    for (const auto& [l, d] : atom_diff) {
        (d > 0.0 ? positive : negative) += std::abs(d);
    }

    const auto diff = cancelled_difference(a, b);
    if (!diff.empty()) {
        std::vector<double> edges;
        std::vector<double> singular;
        for (const auto& sp : diff) {
            const auto bp = sp.piece->breakpoints();
            edges.insert(edges.end(), bp.begin(), bp.end());
            const auto sg = sp.piece->singular_points();
            singular.insert(singular.end(), sg.begin(), sg.end());
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        const bool origin_oscillation =
            std::any_of(diff.begin(), diff.end(), [](const SignedPiece& sp) { return oscillates_at_origin(*sp.piece); });
        const auto is_singular = [&singular](double x) {
            return std::find(singular.begin(), singular.end(), x) != singular.end();
        };
        const auto w = [&diff](double l) {
            double s = 0.0;
            for (const auto& sp : diff) {
                s += sp.factor * sp.piece->density(l);
            }
            return s;
        };
        const auto pos = [&w](double l) { return std::max(w(l), 0.0); };
        const auto neg = [&w](double l) { return std::max(-w(l), 0.0); };
        oracles::QuadratureOptions o;
        o.abs_tol = 1e-11;
        o.rel_tol = 1e-10;
        o.max_depth = 50;
        for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
            const double p = edges[i];
            const double q = edges[i + 1];
            const bool sp = is_singular(p);
            const bool sq = is_singular(q);
            if (origin_oscillation && p == 0.0) {
                positive += 2.0 * origin_oscillation_integral(pos, q, o);
                negative += 2.0 * origin_oscillation_integral(neg, q, o);
                continue;
            }
            positive += 2.0 * singular_aware_integral(pos, p, q, sp, sq, o);
            negative += 2.0 * singular_aware_integral(neg, p, q, sp, sq, o);
        }
    }
    return std::max(positive, negative);
}

double tv0_distance(const SpectralMeasure& a, const SpectralMeasure& b)
{
    const auto grid = default_origin_grid();
    const auto da = origin_density(a, grid);
    const auto db = origin_density(b, grid);
    if (da.status != OriginStatus::finite || db.status != OriginStatus::finite) {
        throw PreconditionError("tv0_distance: origin density is " +
                                to_string(da.status != OriginStatus::finite ? da.status : db.status));
    }
    return tv_distance(a, b) + std::abs(da.value - db.value);
}

} // namespace pershlab::spectral
