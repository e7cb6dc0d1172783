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
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "oracle_values.hpp"
#include "pershlab/error.hpp"
#include "pershlab/spectral/builtins.hpp"
#include "pershlab/spectral/operations.hpp"
#include "test_support.hpp"

namespace {

using namespace pershlab;
using namespace pershlab::spectral;
namespace bi = pershlab::spectral::builtins;
namespace ov = pershlab::test::oracle;
constexpr double kPi = std::numbers::pi;

TEST(Covariance, CosinePair)
{
    const auto m = bi::cosine_pair(1.0, 1.0);
    EXPECT_NEAR(covariance(m, kPi), -1.0, 1e-15);
    EXPECT_NEAR(covariance(m, 0.7), std::cos(0.7), 1e-15);
}

TEST(Covariance, AtZeroIsTotalMass)
{
    for (const auto& m : test::all_builtins()) {
        EXPECT_NEAR(covariance(m, 0.0), m.total_mass(), 1e-10 * m.total_mass()) << m.name();
    }
}

TEST(Covariance, SincBox)
{
    const auto m = bi::sinc_box();
    EXPECT_NEAR(covariance(m, 1.0), 0.0, 1e-14);
    EXPECT_NEAR(covariance(m, 0.5), ov::kSincCovHalf, 1e-14);
    EXPECT_NEAR(covariance(m, 0.0), 1.0, 1e-14);
}

TEST(Covariance, BesselJ0)
{
    const auto m = bi::bessel_j0();
    EXPECT_NEAR(covariance(m, 2.5), ov::kBesselJ0At2p5, 1e-10);
    EXPECT_NEAR(covariance(m, 7.3), ov::kBesselJ0At7p3, 1e-10);
}

TEST(Covariance, OscillatingDensities)
{
    const auto rec = bi::counterexample(1.0, 3.0, Oscillation::reciprocal);
    EXPECT_NEAR(covariance(rec, 1.0), ov::kCounterexampleRecipCov1, 1e-8);
    EXPECT_NEAR(covariance(rec, 3.0), ov::kCounterexampleRecipCov3, 1e-8);
    const auto lg = bi::counterexample(1.0, 3.0, Oscillation::log_reciprocal);
    EXPECT_NEAR(covariance(lg, 2.0), ov::kCounterexampleLogCov2, 1e-8);
}

TEST(Covariance, MovingAverage)
{
    const auto m = bi::moving_average({0.5, 0.5});
    EXPECT_NEAR(covariance(m, 0.0), 0.5, 1e-13);
    EXPECT_NEAR(covariance(m, 1.0), 0.25, 1e-13);
    EXPECT_NEAR(covariance(m, 2.0), 0.0, 1e-13);
    EXPECT_NEAR(covariance(m, 5.0), 0.0, 1e-13);
}

TEST(Covariance, RejectsNonFiniteTime)
{
    EXPECT_THROW(covariance(bi::sinc_box(), std::nan("")), ArgumentError);
    EXPECT_THROW(covariance(bi::sinc_box(), INFINITY), ArgumentError);
}

TEST(CovarianceProperties, BoundedByVariance)
{
    for (const auto& m : test::all_builtins()) {
        const double r0 = covariance(m, 0.0);
        for (double t = 0.1; t < 20.0; t += 0.37) {
            EXPECT_LE(std::abs(covariance(m, t)), r0 * (1.0 + 1e-12)) << m.name() << ' ' << t;
        }
    }
}

TEST(CovarianceProperties, CompactSupportSmoothness)
{
    for (const auto& m : test::all_builtins()) {
        const double d = m.support_radius();
        const double r0 = covariance(m, 0.0);
        for (double t : {0.01, 0.05, 0.1, 0.3, 1.0, 2.0}) {
            EXPECT_LE(r0 - covariance(m, t), 0.5 * d * d * r0 * t * t + 1e-12)
                << m.name() << ' ' << t;
        }
    }
}

TEST(CovarianceProperties, GridMatricesArePositiveSemidefinite)
{
    for (const auto& m : test::all_builtins()) {
        const double r0 = covariance(m, 0.0);
        for (double delta : {0.1, 0.5, 1.3}) {
            const int n = 64;
            std::vector<double> r(n);
            for (int k = 0; k < n; ++k) {
                r[k] = covariance(m, k * delta);
            }
            Eigen::MatrixXd c(n, n);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    c(i, j) = r[std::abs(i - j)];
                }
            }
            const double lo = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(c).eigenvalues()(0);
            EXPECT_GE(lo, -1e-8 * r0) << m.name() << " delta=" << delta;
        }
    }
}

TEST(Restrict, Examples)
{
    const auto box = bi::box(1.0, 0.0, kPi);
    const auto half = restrict(box, kPi / 2);
    EXPECT_NEAR(half.total_mass(), kPi, 1e-14);
    EXPECT_NEAR(half.density(1.0), 1.0, 0.0);
    EXPECT_EQ(half.density(2.0), 0.0);

    EXPECT_TRUE(restrict(bi::cosine_pair(1.0, 1.0), 0.5).is_zero());

    const auto lg = restrict(bi::counterexample(1.0, 3.0, Oscillation::log_reciprocal), 0.1);
    EXPECT_NEAR(lg.total_mass(), ov::kCounterexampleLogMassTo0p1, 1e-8);
    EXPECT_THROW(restrict(box, 0.0), ArgumentError);
}

TEST(Restrict, NeverIncreasesMass)
{
    for (const auto& m : test::all_builtins()) {
        for (double l : {0.05, 0.5, 2.0, 10.0}) {
            EXPECT_LE(restrict(m, l).total_mass(), m.total_mass() * (1.0 + 1e-12)) << m.name();
        }
    }
}

TEST(Multiplier, Values)
{
    EXPECT_EQ(Multiplier::fejer(3.0).value(0.0), 1.0);
    EXPECT_NEAR(Multiplier::fejer(4.0).value(kPi), 0.0, 1e-30);
    EXPECT_EQ(Multiplier::triangle(2.0).value(3.0), 0.0);
    EXPECT_EQ(Multiplier::triangle(2.0).value(1.0), 0.5);
    EXPECT_THROW(Multiplier::from_tag("gauss", 1.0), ArgumentError);
    EXPECT_THROW(Multiplier::fejer(0.0), ArgumentError);
}

TEST(Multiplier, AppliesSquare)
{
    const auto killed = apply_multiplier(bi::cosine_pair(kPi, 1.0), Multiplier::fejer(4.0));
    EXPECT_NEAR(killed.total_mass(), 0.0, 1e-30);
    EXPECT_TRUE(apply_multiplier(bi::sinc_box(), "constant", 0.0).is_zero());

    const auto tri = apply_multiplier(bi::box(1.0, 0.0, 2.0), Multiplier::triangle(2.0));
    EXPECT_NEAR(tri.density(1.0), 0.25, 1e-15);
    EXPECT_NEAR(tri.total_mass(), 2.0 * 2.0 / 3.0, 1e-12);

    const auto c = apply_multiplier(bi::sinc_box(), Multiplier::constant(2.0));
    EXPECT_NEAR(covariance(c, 0.3), 4.0 * covariance(bi::sinc_box(), 0.3), 1e-14);
}

TEST(Multiplier, KeepsOriginRatioWhenHIsOneAtZero)
{
    const auto base = bi::box(1.0, 0.0, 1.0);
    const auto smoothed = apply_multiplier(base, Multiplier::fejer(2.0));
    EXPECT_NEAR(smoothed.symmetric_mass(1e-6) / 2e-6, 1.0, 1e-9);
}

TEST(AddScale, Linearity)
{
    const auto half = bi::cosine_pair(1.0, 0.5);
    const auto sum = add(half, half);
    for (double t : {0.0, 0.4, 2.0, 7.0}) {
        EXPECT_NEAR(covariance(sum, t), std::cos(t), 1e-15);
    }
    const auto box = bi::box(0.5, 0.5, 1.5);
    const auto same = add(box, SpectralMeasure::zero());
    EXPECT_EQ(tv_distance(box, same), 0.0);
    EXPECT_NEAR(covariance(same, 1.7), covariance(box, 1.7), 0.0);

    const auto sa = add(bi::sinc_box(), bi::origin_atom(0.7));
    for (double t : {0.3, 1.0, 2.5}) {
        EXPECT_NEAR(covariance(sa, t), std::sin(kPi * t) / (kPi * t) + 0.7, 1e-14);
    }

    const auto pairs = test::all_builtins();
    for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
        const auto s = add(pairs[i], pairs[i + 1]);
        for (double t : {0.0, 0.9, 3.1}) {
            EXPECT_NEAR(covariance(s, t), covariance(pairs[i], t) + covariance(pairs[i + 1], t),
                        1e-10)
                << pairs[i].name() << '+' << pairs[i + 1].name();
        }
    }
}

TEST(AddScale, Scale)
{
    const auto m = scale(bi::bessel_j0(), 2.5);
    EXPECT_NEAR(m.total_mass(), 2.5, 1e-12);
    EXPECT_NEAR(covariance(m, 1.1), 2.5 * covariance(bi::bessel_j0(), 1.1), 1e-12);
    EXPECT_THROW(scale(m, -1.0), ArgumentError);
    EXPECT_TRUE(scale(m, 0.0).is_zero());
}

TEST(TotalVariation, Examples)
{
    const auto s = bi::sinc_box();
    EXPECT_EQ(tv_distance(s, s), 0.0);
    EXPECT_NEAR(tv_distance(bi::box(1.0, 0.0, 1.0), bi::box(1.1, 0.0, 1.0)), 0.2, 1e-14);
    EXPECT_NEAR(tv_distance(bi::cosine_pair(1.0, 1.0), bi::cosine_pair(2.0, 1.0)), 1.0, 1e-15);
    EXPECT_NEAR(tv_distance(bi::bessel_j0(), s), ov::kTvBesselSinc, 1e-8);
}

TEST(TotalVariation, MetricAxioms)
{
    const auto ms = test::all_builtins();
    std::mt19937 rng(20260101);
    std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = 0; j < ms.size(); ++j) {
            const double dij = tv_distance(ms[i], ms[j]);
            EXPECT_NEAR(dij, tv_distance(ms[j], ms[i]), 1e-9);
            if (i == j) {
                EXPECT_EQ(dij, 0.0);
            } else {
                EXPECT_GT(dij, 1e-6) << ms[i].name() << ' ' << ms[j].name();
            }
        }
    }
    for (int k = 0; k < 30; ++k) {
        const auto& a = ms[pick(rng)];
        const auto& b = ms[pick(rng)];
        const auto& c = ms[pick(rng)];
        EXPECT_LE(tv_distance(a, c), tv_distance(a, b) + tv_distance(b, c) + 1e-9)
            << a.name() << ' ' << b.name() << ' ' << c.name();
    }
}

TEST(TotalVariation, OscillatingOriginScales)
{
    for (auto mode : {Oscillation::reciprocal, Oscillation::log_reciprocal}) {
        const auto m = bi::counterexample(1.0, 3.0, mode);
        EXPECT_NEAR(tv_distance(m, scale(m, 1.1)), 0.1 * m.total_mass(), 1e-9);
    }
}

TEST(TotalVariation, OriginVariant)
{
    EXPECT_NEAR(tv0_distance(bi::box(1.0, 0.0, 1.0), bi::box(1.1, 0.0, 1.0)), 0.3, 1e-9);
    EXPECT_THROW(tv0_distance(bi::sinc_box(), add(bi::sinc_box(), bi::origin_atom(1.0))),
                 PreconditionError);
    EXPECT_THROW(
        tv0_distance(bi::sinc_box(), bi::counterexample(1.0, 3.0, Oscillation::log_reciprocal)),
        PreconditionError);
}

TEST(Measure, Invariants)
{
    EXPECT_THROW(SpectralMeasure({}, {Atom{1.0, -0.1}}), ArgumentError);
    EXPECT_THROW(SpectralMeasure({}, {Atom{-1.0, 0.1}}), ArgumentError);
    EXPECT_THROW(SpectralMeasure({}, {}, -1.0), ArgumentError);
    const auto m = add(bi::box(0.5, 0.5, 1.5), bi::cosine_pair(1.0, 0.4));
    EXPECT_NEAR(m.total_mass(), 1.4, 1e-14);
    EXPECT_EQ(m.density(-1.0), m.density(1.0));
    EXPECT_NEAR(m.positive_mass(0.0, 10.0), 0.7, 1e-14);
    EXPECT_NEAR(m.symmetric_mass(1.2), 1.4 - 2 * 0.15, 1e-14);
}

} // namespace
