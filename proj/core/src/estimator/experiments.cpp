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

#include "pershlab/estimator/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "pershlab/error.hpp"
#include "pershlab/estimator/windows.hpp"
#include "pershlab/spectral/operations.hpp"

namespace pershlab::estimator {

namespace {

constexpr std::uint32_t kSecondStream = 16;

EstimateKind estimate_kind(EventKind kind, bool sampled)
{
    if (kind == EventKind::persistence) {
        return sampled ? EstimateKind::persistence_sampled : EstimateKind::persistence;
    }
    return sampled ? EstimateKind::ball_sampled : EstimateKind::ball;
}

void check_level(EventKind kind, double level)
{
    if (!std::isfinite(level)) {
        throw ArgumentError("level must be finite");
    }
    if (kind == EventKind::ball && !(level > 0.0)) {
        throw ArgumentError("ball level must be positive");
    }
}

// Integer ratio q / base, or ArgumentError.
std::size_t integer_ratio(double q, double base, const char* what)
{
    const double r = q / base;
    const double k = std::round(r);
    if (!(k >= 0.0) || std::abs(r - k) > 1e-9 * std::max(1.0, r)) {
        throw ArgumentError(std::string(what) + " is not an integer multiple of the grid step");
    }
    return static_cast<std::size_t>(k);
}

ExponentEstimate batch_estimate(const sampler::PathBatch& batch, EventKind kind, double level,
                                std::size_t points)
{
    check_level(kind, level);
    if (points == 0 || points > batch.n_points) {
        throw ArgumentError("horizon exceeds the batch");
    }
    const WindowQuery q{0, points, 1, kind};
    const LevelSweep sweep(kind, collect_statistics(batch, std::span(&q, 1)).front());
    return make_estimate(estimate_kind(kind, false), sweep.hits(level), batch.n_paths,
                         static_cast<double>(points - 1) * batch.delta, level, batch.delta,
                         batch.seed);
}

double stabilization(const std::vector<ExponentEstimate>& points)
{
    if (points.size() < 2) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    double worst = 0.0;
    const std::size_t from = points.size() >= 3 ? points.size() - 3 : 0;
    for (std::size_t i = from + 1; i < points.size(); ++i) {
        const double d = std::abs(points[i].theta_hat - points[i - 1].theta_hat);
        worst = std::isnan(d) ? d : std::max(worst, d);
    }
    return worst;
}

double combined_tolerance(const ExponentEstimate& a, const ExponentEstimate& b)
{
    const double sa = a.standard_error();
    const double sb = b.standard_error();
    return kZ95 * std::sqrt(sa * sa + sb * sb);
}

} // namespace

std::size_t horizon_points(double horizon, double delta)
{
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw ArgumentError("grid step must be positive");
    }
    if (!(horizon >= 0.0) || !std::isfinite(horizon)) {
        throw ArgumentError("horizon must be nonnegative");
    }
    return integer_ratio(horizon, delta, "horizon") + 1;
}

ExponentEstimate persistence_estimate(const sampler::PathBatch& batch, double level,
                                      std::size_t points)
{
    return batch_estimate(batch, EventKind::persistence, level, points);
}

ExponentEstimate ball_estimate(const sampler::PathBatch& batch, double level, std::size_t points)
{
    return batch_estimate(batch, EventKind::ball, level, points);
}

std::vector<ExponentCurve> exponent_curve(const sampler::PathGenerator& generator, EventKind kind,
                                          std::span<const double> levels,
                                          std::span<const double> horizons, std::size_t n_paths,
                                          std::uint64_t seed)
{
    if (levels.empty() || horizons.empty()) {
        throw ArgumentError("exponent_curve: need levels and horizons");
    }
    for (double l : levels) {
        check_level(kind, l);
    }
    const double delta = generator.delta();
    std::vector<WindowQuery> queries;
    for (std::size_t i = 0; i < horizons.size(); ++i) {
        if (i > 0 && !(horizons[i] > horizons[i - 1])) {
            throw ArgumentError("exponent_curve: horizons must be increasing");
        }
        queries.push_back({0, horizon_points(horizons[i], delta), 1, kind});
    }
    const auto stats = collect_statistics(generator, seed, n_paths, queries);
    std::vector<LevelSweep> sweeps;
    for (const auto& s : stats) {
        sweeps.emplace_back(kind, s);
    }
    std::vector<ExponentCurve> curves;
    for (double l : levels) {
        ExponentCurve c;
        c.kind = kind;
        c.level = l;
        for (std::size_t i = 0; i < queries.size(); ++i) {
            c.points.push_back(make_estimate(estimate_kind(kind, false), sweeps[i].hits(l),
                                             n_paths,
                                             static_cast<double>(queries[i].end - 1) * delta, l,
                                             delta, seed));
        }
        c.stabilization = stabilization(c.points);
        curves.push_back(std::move(c));
    }
    return curves;
}

std::vector<ExponentCurve> exponent_curve(const spectral::SpectralMeasure& measure, EventKind kind,
                                          std::span<const double> levels,
                                          std::span<const double> horizons, double delta,
                                          std::size_t n_paths, std::uint64_t seed)
{
    if (horizons.empty()) {
        throw ArgumentError("exponent_curve: need horizons");
    }
    const auto gen = sampler::make_generator(measure, delta,
                                             horizon_points(horizons.back(), delta));
    return exponent_curve(*gen, kind, levels, horizons, n_paths, seed);
}

std::vector<ExponentEstimate> sampled_exponent(const spectral::SpectralMeasure& measure,
                                               EventKind kind, double level, double horizon,
                                               std::span<const double> deltas,
                                               std::size_t n_paths, std::uint64_t seed)
{
    check_level(kind, level);
    if (deltas.empty()) {
        throw ArgumentError("sampled_exponent: need at least one grid step");
    }
    for (double d : deltas) {
        if (!(d > 0.0) || !std::isfinite(d)) {
            throw ArgumentError("sampled_exponent: grid steps must be positive");
        }
    }
    const double base = *std::min_element(deltas.begin(), deltas.end());
    const std::size_t n = horizon_points(horizon, base);
    std::vector<WindowQuery> queries;
    for (double d : deltas) {
        const std::size_t stride = integer_ratio(d, base, "grid step");
        integer_ratio(horizon, d, "horizon");
        queries.push_back({0, n, stride, kind});
    }
    const auto gen = sampler::make_generator(measure, base, n);
    const auto stats = collect_statistics(*gen, seed, n_paths, queries);
    std::vector<ExponentEstimate> out;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        const LevelSweep sweep(kind, stats[i]);
        out.push_back(make_estimate(estimate_kind(kind, true), sweep.hits(level), n_paths,
                                    horizon, level, deltas[i], seed));
    }
    return out;
}

PairedVerdict paired_comparison(const spectral::SpectralMeasure& rho,
                                const spectral::SpectralMeasure& nu, EventKind kind, double level,
                                double horizon, double delta, std::size_t n_paths,
                                std::uint64_t seed, Direction expected)
{
    check_level(kind, level);
    const std::size_t n = horizon_points(horizon, delta);
    const auto arm_a = sampler::make_generator(rho, delta, n);
    sampler::GeneratorPtr arm_b = arm_a;
    if (!nu.is_zero()) {
        sampler::GeneratorOptions o;
        o.stream = kSecondStream;
        arm_b = std::make_shared<sampler::SumGenerator>(
            std::vector<sampler::GeneratorPtr>{arm_a, sampler::make_generator(nu, delta, n, o)});
    }
    const WindowQuery q{0, n, 1, kind};
    const auto sa = collect_statistics(*arm_a, seed, n_paths, std::span(&q, 1)).front();
    const auto sb = collect_statistics(*arm_b, seed, n_paths, std::span(&q, 1)).front();

    PairedVerdict v;
    v.expected = expected;
    v.identical = sa == sb;
    std::size_t hits_a = 0;
    std::size_t hits_b = 0;
    for (std::size_t p = 0; p < n_paths; ++p) {
        const bool ha = kind == EventKind::persistence ? sa[p] > level : sa[p] < level;
        const bool hb = kind == EventKind::persistence ? sb[p] > level : sb[p] < level;
        hits_a += ha;
        hits_b += hb;
        v.only_a += ha && !hb;
        v.only_b += hb && !ha;
    }
    const double t = static_cast<double>(n - 1) * delta;
    const auto ek = estimate_kind(kind, false);
    v.a = make_estimate(ek, hits_a, n_paths, t, level, delta, seed);
    v.b = make_estimate(ek, hits_b, n_paths, t, level, delta, seed);
    v.difference = v.b.p_hat - v.a.p_hat;
    v.tolerance = combined_tolerance(v.a, v.b);
    v.holds = expected == Direction::b_at_most_a ? v.difference <= v.tolerance
                                                 : -v.difference <= v.tolerance;
    return v;
}

SmoothingVerdict smoothing_check(const spectral::SpectralMeasure& mu,
                                 const spectral::SpectralMeasure& nu, const spectral::Multiplier& h,
                                 double a, double level, double horizon, double delta,
                                 std::size_t n_paths, std::uint64_t seed)
{
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw ArgumentError("smoothing_check: a must be positive");
    }
    check_level(EventKind::persistence, level);
    const std::size_t n_right = horizon_points(horizon, delta);
    const std::size_t n_left = horizon_points(horizon + a, delta);
    const auto base = sampler::make_generator(mu, delta, n_left);
    sampler::GeneratorOptions o;
    o.stream = kSecondStream;
    const auto arm = [&](const spectral::SpectralMeasure& extra) -> sampler::GeneratorPtr {
        if (extra.is_zero()) {
            return base;
        }
        return std::make_shared<sampler::SumGenerator>(std::vector<sampler::GeneratorPtr>{
            base, sampler::make_generator(extra, delta, n_left, o)});
    };
    const auto left_gen = arm(nu);
    const auto right_gen = arm(spectral::apply_multiplier(nu, h));
    const WindowQuery ql{0, n_left, 1, EventKind::persistence};
    const WindowQuery qr{0, n_right, 1, EventKind::persistence};
    const LevelSweep left(EventKind::persistence,
                          collect_statistics(*left_gen, seed, n_paths, std::span(&ql, 1)).front());
    const LevelSweep right(EventKind::persistence,
                           collect_statistics(*right_gen, seed, n_paths, std::span(&qr, 1)).front());

    SmoothingVerdict v;
    v.left = make_estimate(EstimateKind::persistence, left.hits(level), n_paths,
                           static_cast<double>(n_left - 1) * delta, level, delta, seed);
    v.right = make_estimate(EstimateKind::persistence, right.hits(level), n_paths,
                            static_cast<double>(n_right - 1) * delta, level, delta, seed);
    v.tolerance = combined_tolerance(v.left, v.right);
    v.holds = v.left.p_hat - v.right.p_hat <= v.tolerance;
    return v;
}

SmoothingVerdict smoothing_check(const spectral::SpectralMeasure& mu,
                                 const spectral::SpectralMeasure& nu, double a, double level,
                                 double horizon, double delta, std::size_t n_paths,
                                 std::uint64_t seed)
{
    return smoothing_check(mu, nu, spectral::Multiplier::fejer(a), a, level, horizon, delta,
                           n_paths, seed);
}

} // namespace pershlab::estimator
