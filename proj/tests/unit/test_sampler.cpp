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

#include <cmath>
#include <filesystem>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "pershlab/error.hpp"
#include "pershlab/estimator/windows.hpp"
#include "pershlab/sampler/covariance_grid.hpp"
#include "pershlab/sampler/generators.hpp"
#include "pershlab/sampler/path_batch.hpp"
#include "pershlab/sampler/philox.hpp"
#include "pershlab/sampler/series.hpp"
#include "pershlab/spectral/builtins.hpp"
#include "pershlab/spectral/operations.hpp"
#include "test_support.hpp"

namespace {

using namespace pershlab;
using namespace pershlab::sampler;
namespace bi = pershlab::spectral::builtins;
constexpr double kPi = std::numbers::pi;

// Known-answer vectors published with the Random123 library.
TEST(Philox, KnownAnswers)
{
    EXPECT_EQ(philox4x32_10({0, 0, 0, 0}, {0, 0}),
              (PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
    EXPECT_EQ(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
              (PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
    EXPECT_EQ(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
              (PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Philox, NormalsDependOnlyOnTheirIndex)
{
    std::vector<double> all(40);
    NormalStream(7, 3, 1).fill(all);
    std::vector<double> tail(13);
    NormalStream(7, 3, 1).fill(tail, 21);
    for (std::size_t i = 0; i < tail.size(); ++i) {
        EXPECT_EQ(tail[i], all[21 + i]);
    }
    std::vector<double> other(40);
    NormalStream(7, 3, 2).fill(other);
    EXPECT_NE(other, all);
}

TEST(Philox, NormalMoments)
{
    const std::size_t n = 200000;
    std::vector<double> z(n);
    NormalStream(11, 0, 0).fill(z);
    double m1 = 0.0;
    double m2 = 0.0;
    double m4 = 0.0;
    for (double x : z) {
        m1 += x;
        m2 += x * x;
        m4 += x * x * x * x;
    }
    m1 /= n;
    m2 /= n;
    m4 /= n;
    EXPECT_LT(std::abs(m1), 5.0 / std::sqrt(double(n)));
    EXPECT_LT(std::abs(m2 - 1.0), 5.0 * std::sqrt(2.0 / n));
    EXPECT_LT(std::abs(m4 - 3.0), 5.0 * std::sqrt(96.0 / n));
}

TEST(BuildGrid, OrthogonalCosinePair)
{
    const auto g = CovarianceGrid::build(bi::cosine_pair(1.0, 1.0), kPi / 2, 2);
    EXPECT_NEAR(g.r_values()[0], 1.0, 1e-15);
    EXPECT_NEAR(g.r_values()[1], 0.0, 1e-15);
    const Eigen::MatrixXd t = g.toeplitz();
    EXPECT_NEAR((t - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff(), 0.0, 1e-15);
}

TEST(BuildGrid, SincAtIntegersIsWhite)
{
    const auto g = CovarianceGrid::build(bi::sinc_box(), 1.0, 4);
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_NEAR(g.r_values()[k], k == 0 ? 1.0 : 0.0, 1e-14);
    }
    EXPECT_EQ(g.kind(), FactorizationKind::circulant);
    EXPECT_EQ(g.embedding_size(), 8u);
}

TEST(BuildGrid, Preconditions)
{
    EXPECT_THROW(CovarianceGrid::build(spectral::SpectralMeasure::zero(), 1.0, 4), ArgumentError);
    EXPECT_THROW(CovarianceGrid::build(bi::sinc_box(), 0.0, 4), ArgumentError);
    EXPECT_THROW(CovarianceGrid::build(bi::sinc_box(), 1.0, 0), ArgumentError);
    EXPECT_THROW(make_generator(spectral::SpectralMeasure::zero(), 1.0, 4), ArgumentError);
}

TEST(BuildGrid, Invariants)
{
    for (const auto& m : test::all_builtins()) {
        for (std::size_t n : {1u, 2u, 17u, 64u}) {
            const auto g = CovarianceGrid::build(m, 0.5, n);
            const auto& r = g.r_values();
            ASSERT_GT(r[0], 0.0) << m.name();
            for (double v : r) {
                EXPECT_LE(std::abs(v), r[0] * (1 + 1e-12)) << m.name();
            }
            if (g.kind() == FactorizationKind::cholesky) {
                const Eigen::MatrixXd& l = g.cholesky_factor();
                const Eigen::MatrixXd diff = l * l.transpose() - g.toeplitz();
                EXPECT_LE(diff.cwiseAbs().maxCoeff(), 1e-8 * r[0]) << m.name() << " n=" << n;
            } else {
                EXPECT_GE(g.min_embedding_eigenvalue(), -1e-8 * r[0]) << m.name() << " n=" << n;
                EXPECT_LT(g.clamped_mass(), 1e-8 * r[0] * double(g.embedding_size()));
                for (double e : g.embedding_eigenvalues()) {
                    EXPECT_GE(e, 0.0);
                }
            }
        }
    }
}

TEST(BuildGrid, IndefiniteEmbeddingFallsBackToCholesky)
{
    // A single cosine has a rank-two Toeplitz matrix whose minimal circulant
    // embedding is indefinite for an irrational frequency.
    const auto g = CovarianceGrid::build(bi::cosine_pair(1.0, 1.0), 0.3, 12);
    EXPECT_EQ(g.kind(), FactorizationKind::cholesky);
    EXPECT_GT(g.jitter(), 0.0);
    const Eigen::MatrixXd& l = g.cholesky_factor();
    EXPECT_LE((l * l.transpose() - g.toeplitz()).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(BuildGrid, RejectsInvalidValues)
{
    EXPECT_THROW(CovarianceGrid::from_values({0.0, 0.0}, 1.0), ArgumentError);
    EXPECT_THROW(CovarianceGrid::from_values({1.0, 1.5}, 1.0), ArgumentError);
    // r = (1, 1, -1) is not positive semidefinite at any jitter.
    EXPECT_THROW(CovarianceGrid::from_values({1.0, 1.0, -1.0}, 1.0), NumericalError);
}

TEST(Sampling, IdentityPositiveFraction)
{
    const auto g = std::make_shared<const CovarianceGrid>(CovarianceGrid::build(bi::sinc_box(), 1.0, 1));
    const std::size_t n = 1000000;
    const auto batch = sample_factorized(g, 5, n);
    std::size_t pos = 0;
    for (double x : batch.values) {
        pos += x > 0.0;
    }
    const double p = double(pos) / n;
    EXPECT_LT(std::abs(p - 0.5), 3.0 * std::sqrt(0.25 / n));
}

TEST(Sampling, Deterministic)
{
    const auto gen = make_generator(bi::bessel_j0(), 0.25, 40);
    const auto a = sample_batch(*gen, 99, 300);
    const auto b = sample_batch(*gen, 99, 300);
    EXPECT_EQ(a.values, b.values);
    const auto c = sample_batch(*gen, 100, 300);
    EXPECT_NE(a.values, c.values);
}

TEST(Sampling, PathsDoNotDependOnBatchSize)
{
    for (const auto& m : {bi::sinc_box(), bi::cosine_pair(1.3, 1.0), bi::bessel_j0()}) {
        const auto gen = make_generator(m, 0.3, 33);
        const auto small = sample_batch(*gen, 4, 5);
        const auto large = sample_batch(*gen, 4, 301);
        for (std::size_t i = 0; i < small.values.size(); ++i) {
            ASSERT_EQ(small.values[i], large.values[i]) << m.name();
        }
        std::vector<double> tail(2 * 33);
        gen->generate(4, 3, 2, tail);
        for (std::size_t i = 0; i < tail.size(); ++i) {
            ASSERT_EQ(tail[i], small.values[3 * 33 + i]) << m.name();
        }
    }
}

TEST(Sampling, ThreadCountDoesNotChangeStreams)
{
    const auto gen = make_generator(bi::sinc_box(), 0.5, 20);
    const auto batch = sample_batch(*gen, 8, 5000);
    std::vector<double> seen(batch.values.size());
    stream_paths(*gen, 8, 5000, [&](std::uint64_t first, std::size_t count, std::span<const double> v) {
        std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(count * 20),
                  seen.begin() + static_cast<std::ptrdiff_t>(first * 20));
    }, 333);
    EXPECT_EQ(seen, batch.values);
}

void expect_covariances(const PathGenerator& gen, const spectral::SpectralMeasure& m,
                        std::size_t n_paths, std::size_t max_lag, double slack = 0.0)
{
    const auto lags = estimator::lag_covariances(gen, 21, n_paths, max_lag);
    for (const auto& l : lags) {
        const double r = spectral::covariance(m, double(l.lag) * gen.delta());
        EXPECT_LE(std::abs(l.value - r), 5.0 * l.standard_error + slack)
            << m.name() << " lag=" << l.lag << " got=" << l.value << " want=" << r;
    }
}

TEST(Sampling, CovarianceReproductionForEveryBuiltin)
{
    for (const auto& m : test::all_builtins()) {
        const double delta = m.name() == "ma_density" ? 1.0 : 0.5;
        const auto gen = make_generator(m, delta, 64);
        expect_covariances(*gen, m, 100000, 63);
    }
}

TEST(Sampling, CosinePairMatchesCosine)
{
    const auto m = bi::cosine_pair(1.0, 1.0);
    const auto gen = make_generator(m, 2 * kPi / 64, 65);
    expect_covariances(*gen, m, 50000, 10);
    // Every path is a combination of cos t and sin t.
    const auto b = sample_batch(*gen, 3, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        const double c = b.at(i, 0);
        const double s = b.at(i, 16);
        for (std::size_t k = 0; k < 65; ++k) {
            const double t = double(k) * gen->delta();
            EXPECT_NEAR(b.at(i, k), c * std::cos(t) + s * std::sin(t), 1e-9);
        }
    }
}

TEST(MovingAverage, Examples)
{
    const auto white = sample_moving_average({1.0}, 8, 1, 50000);
    const auto lw = estimator::lag_covariances(white, 4);
    EXPECT_LE(std::abs(lw[0].value - 1.0), 5 * lw[0].standard_error);
    for (std::size_t k = 1; k < lw.size(); ++k) {
        EXPECT_LE(std::abs(lw[k].value), 5 * lw[k].standard_error);
    }
    const auto half = sample_moving_average({0.5, 0.5}, 8, 1, 50000);
    const auto lh = estimator::lag_covariances(half, 3);
    const double want[] = {0.5, 0.25, 0.0, 0.0};
    for (std::size_t k = 0; k < lh.size(); ++k) {
        EXPECT_LE(std::abs(lh[k].value - want[k]), 5 * lh[k].standard_error) << k;
    }
    EXPECT_EQ(half.generator_tag, "moving_average(2)");
    EXPECT_THROW(sample_moving_average({}, 8, 1, 10), ArgumentError);
}

TEST(MovingAverage, AgreesWithDensityCovariance)
{
    const std::vector<double> u = {1.0, -0.4, 0.25};
    const auto m = bi::moving_average(u);
    MovingAverageGenerator gen(u, 10);
    expect_covariances(gen, m, 50000, 5);
}

TEST(Series, RecordedBound)
{
    const auto dec = SeriesDecomposition::build(bi::sinc_box(), 0.1, 101, {.n_intervals = 1000});
    EXPECT_EQ(dec.n_intervals(), 1000u);
    EXPECT_DOUBLE_EQ(dec.horizon(), 10.0);
    const double want = 0.5 * std::pow(kPi * 10.0 / 1000.0, 2);
    EXPECT_NEAR(dec.remainder_bound(), want, 1e-15);
    EXPECT_NEAR(dec.remainder_bound(), 4.9348e-4, 1e-8);
    EXPECT_LE(dec.remainder_variance(), dec.remainder_bound());
}

TEST(Series, IntervalCountFromTarget)
{
    const double target = 1e-4;
    const auto dec = SeriesDecomposition::build(bi::sinc_box(), 0.25, 21, {.target_remainder_variance = target});
    const auto want = static_cast<std::size_t>(std::ceil(kPi * 5.0 * std::sqrt(1.0 / (2 * target))));
    EXPECT_EQ(dec.n_intervals(), want);
    EXPECT_LE(dec.remainder_bound(), target);
}

TEST(Series, WeightsAndComponents)
{
    for (const auto& name : test::compact_density_names()) {
        const auto m = bi::by_name(name);
        const double delta = name == "ma_density" ? 1.0 : 0.25;
        const auto dec = SeriesDecomposition::build(m, delta, 33, {.n_intervals = 200});
        double total = 0.0;
        for (double w : dec.weights()) {
            EXPECT_GE(w, 0.0);
            total += w;
        }
        EXPECT_LE(test::relative_gap(total, m.total_mass()), 1e-10) << name;
        EXPECT_LE(test::relative_gap(total, dec.support_mass()), 1e-10) << name;
        EXPECT_LE(dec.max_component_norm(), 1.0 + 1e-12) << name;
        EXPECT_LE(dec.cosine_components().cwiseAbs().maxCoeff(), 1.0 + 1e-12) << name;
        const Eigen::MatrixXd gap = dec.target_covariance() - dec.series_covariance();
        EXPECT_LE(gap.diagonal().maxCoeff(), dec.remainder_bound() * (1 + 1e-9) + 1e-13) << name;
    }
}

TEST(Series, SinglePairIsExact)
{
    const auto m = bi::cosine_pair(1.0, 1.0);
    const auto gen = make_series_generator(m, 0.1, 40, {.n_intervals = 1});
    EXPECT_NEAR(gen->decomposition().remainder_variance(), 0.0, 1e-14);
    const auto b = sample_batch(*gen, 2, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        const double zeta = b.at(i, 0);
        const double eta = (b.at(i, 10) - zeta * std::cos(1.0)) / std::sin(1.0);
        for (std::size_t k = 0; k < 40; ++k) {
            const double t = 0.1 * double(k);
            EXPECT_NEAR(b.at(i, k), zeta * std::cos(t) + eta * std::sin(t), 1e-12);
        }
    }
}

TEST(Series, Preconditions)
{
    const auto m = bi::sinc_box();
    EXPECT_THROW(SeriesDecomposition::build(m, 0.5, 4, {.radius = 1.0}), ArgumentError);
    EXPECT_THROW(SeriesDecomposition::build(m, 0.5, 4, {}), ArgumentError);
    EXPECT_THROW(SeriesDecomposition::build(m, 0.5, 4, {.n_intervals = 0}), ArgumentError);
    EXPECT_THROW(SeriesDecomposition::build(spectral::SpectralMeasure::zero(), 0.5, 4, {.n_intervals = 3}),
                 ArgumentError);
    EXPECT_THROW(sample_series(m, 5.0, 1.0, 1, 10, 0.0), ArgumentError);
}

TEST(Series, CovarianceWithinBound)
{
    const auto m = bi::sinc_box();
    const auto batch = sample_series(m, 5.0, 1.0, 12, 40000, 1e-4);
    EXPECT_LE(batch.metadata.at("remainder_bound"), 1e-4);
    const auto lags = estimator::lag_covariances(batch, 2);
    for (const auto& l : lags) {
        const double r = spectral::covariance(m, double(l.lag));
        EXPECT_LE(std::abs(l.value - r), 5 * l.standard_error + batch.metadata.at("remainder_bound")) << l.lag;
    }
}

TEST(Series, RemainderSharpness)
{
    // With the exact remainder added on its own stream, exact - series is
    // the remainder itself on common randomness.
    const auto m = bi::sinc_box();
    SeriesOptions opt{.n_intervals = 20};
    const auto series = make_series_generator(m, 0.25, 21, opt);
    opt.exact_remainder = true;
    const auto exact = make_series_generator(m, 0.25, 21, opt);
    const auto a = sample_batch(*series, 6, 40000);
    const auto b = sample_batch(*exact, 6, 40000);
    const double bound = series->decomposition().remainder_bound();
    for (std::size_t k = 0; k < 21; ++k) {
        double s2 = 0.0;
        double s4 = 0.0;
        for (std::size_t i = 0; i < a.n_paths; ++i) {
            const double d = b.at(i, k) - a.at(i, k);
            s2 += d * d;
            s4 += d * d * d * d;
        }
        const double var = s2 / a.n_paths;
        const double se = std::sqrt((s4 / a.n_paths - var * var) / a.n_paths);
        EXPECT_LE(var, bound + 5 * se) << k;
    }
    expect_covariances(*exact, m, 40000, 8);
}

TEST(Series, AgreesWithFactorizedSampler)
{
    const auto m = bi::bessel_j0();
    const auto series = make_series_generator(m, 0.5, 17, {.target_remainder_variance = 1e-5});
    const auto exact = make_generator(m, 0.5, 17);
    const auto ls = estimator::lag_covariances(*series, 31, 20000, 16);
    const auto le = estimator::lag_covariances(*exact, 32, 20000, 16);
    for (std::size_t k = 0; k < ls.size(); ++k) {
        const double se = std::hypot(ls[k].standard_error, le[k].standard_error);
        EXPECT_LE(std::abs(ls[k].value - le[k].value), 5 * se + 1e-5) << k;
    }
}

TEST(PathDump, RoundTrip)
{
    const auto gen = make_generator(bi::sinc_box(), 0.125, 9);
    const auto batch = sample_batch(*gen, 77, 13);
    const auto file = std::filesystem::temp_directory_path() / "pershlab_dump_test.bin";
    write_path_dump(file, batch);
    EXPECT_EQ(std::filesystem::file_size(file), 32u + 8u * 13u * 9u);
    const auto back = read_path_dump(file);
    EXPECT_EQ(back.n_paths, 13u);
    EXPECT_EQ(back.n_points, 9u);
    EXPECT_EQ(back.delta, 0.125);
    EXPECT_EQ(back.seed, 77u);
    EXPECT_EQ(back.values, batch.values);
    std::filesystem::resize_file(file, 40);
    EXPECT_THROW(read_path_dump(file), ArgumentError);
    std::filesystem::remove(file);
}

} // namespace
