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
#include <nlohmann/json.hpp>

#include "oracle_values.hpp"
#include "pershlab/error.hpp"
#include "pershlab/spectral/builtins.hpp"
#include "pershlab/spectral/diagnostics.hpp"
#include "pershlab/spectral/measure_io.hpp"
#include "pershlab/spectral/operations.hpp"
#include "test_support.hpp"

namespace {

using namespace pershlab;
using namespace pershlab::spectral;
namespace bi = pershlab::spectral::builtins;
namespace ov = pershlab::test::oracle;
constexpr double kPi = std::numbers::pi;

TEST(Fold, DoubleWidthBox)
{
    const auto m = bi::box(1.0, 0.0, 2 * kPi);
    const auto f = fold(m, 1.0);
    EXPECT_NEAR(f.total_mass(), 4 * kPi, 1e-12);
    EXPECT_NEAR(f.density(0.3), 2.0, 1e-14);
    EXPECT_NEAR(f.density(-3.0), 2.0, 1e-14);
    EXPECT_EQ(f.density(3.3), 0.0);
    for (int k = 0; k <= 20; ++k) {
        EXPECT_NEAR(covariance(f, k), covariance(m, k), 1e-11) << k;
    }
}

TEST(Fold, AtomAtFullPeriodMovesToOrigin)
{
    const auto f = fold(bi::cosine_pair(2 * kPi, 0.8), 1.0);
    ASSERT_EQ(f.atoms().size(), 1u);
    EXPECT_NEAR(f.atoms()[0].lambda, 0.0, 1e-12);
    EXPECT_NEAR(f.atoms()[0].mass, 0.8, 1e-15);
}

TEST(Fold, SupportInsideIsUnchanged)
{
    for (const auto& m : {bi::sinc_box(), bi::bessel_j0(), bi::box(0.5, 0.5, 1.5)}) {
        const auto f = fold(m, 0.5);
        EXPECT_EQ(tv_distance(m, f), 0.0) << m.name();
        EXPECT_NEAR(covariance(f, 0.77), covariance(m, 0.77), 1e-14) << m.name();
    }
}

TEST(FoldProperties, MassConservation)
{
    for (const auto& m : test::all_builtins()) {
        for (double delta : {0.01, 0.1, 0.5, 1.0, 2.0, 3.0, 10.0}) {
            const auto f = fold(m, delta);
            EXPECT_LE(test::relative_gap(f.total_mass(), m.total_mass()), 1e-10)
                << m.name() << " delta=" << delta;
        }
    }
}

TEST(FoldProperties, CovarianceAtGridPoints)
{
    for (const auto& m : test::all_builtins()) {
        for (double delta : {0.7, 1.0, 2.5}) {
            const auto f = fold(m, delta);
            for (int k = 0; k * delta <= 20.0; ++k) {
                EXPECT_NEAR(covariance(f, k * delta), covariance(m, k * delta), 1e-9)
                    << m.name() << " delta=" << delta << " k=" << k;
            }
        }
    }
}

TEST(FoldProperties, RestrictThenFoldMatchesDirectConstruction)
{
    const auto m = bi::box(1.0, 0.0, 3.0);
    const auto a = fold(restrict(m, 2.0), 1.0);
    const auto b = fold(bi::box(1.0, 0.0, 2.0), 1.0);
    EXPECT_NEAR(tv_distance(a, b), 0.0, 1e-12);
}

TEST(FoldNonconvergence, OriginRatioGrowsAsWindowShrinks)
{
    // Folding at delta = 1/2 wraps the peaks at 4 pi n onto the origin.
    const auto f = fold(bi::nonconv_tail(), 0.5);
    double prev = 0.0;
    for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7}) {
        const double r = mass_ratio(f, eps);
        EXPECT_GT(r, prev) << eps;
        prev = r;
    }
    // The peak centred at 4 pi contributes density 1 / (4 pi) per side.
    EXPECT_NEAR(mass_ratio(f, 1e-12), 1.0 + 1.0 / (2 * kPi), 1e-3);
    EXPECT_GT(mass_ratio(f, 1e-3), mass_ratio(f, 1e-1));
}

TEST(NonconvTail, PeakMasses)
{
    EXPECT_NEAR(nonconv_peak_mass(1), ov::kNonconvPeakMass1, 1e-12);
    EXPECT_NEAR(nonconv_peak_mass(2), ov::kNonconvPeakMass2, 1e-15);
}

TEST(Diagnostics, FlatBox)
{
    const auto m = bi::box(1.0, 0.0, kPi);
    const auto grid = default_origin_grid();
    const auto d = diagnostics(m, 1.0, grid);
    for (const auto& [x, v] : d.mass_ratio_curve) {
        EXPECT_NEAR(v, 1.0, 1e-14) << x;
    }
    EXPECT_EQ(d.origin_density.status, OriginStatus::finite);
    EXPECT_NEAR(d.origin_density.value, 1.0, 1e-14);
    EXPECT_NEAR(d.log_moment, ov::kLogMomentBoxPi, 1e-8);
    EXPECT_GE(d.log_moment, m.positive_mass(0.0, INFINITY));
}

TEST(Diagnostics, OriginAtomDiverges)
{
    const auto m = bi::origin_atom(1.0);
    EXPECT_NEAR(mass_ratio(m, 0.01), 50.0, 1e-12);
    const auto grid = default_origin_grid();
    EXPECT_EQ(origin_density(m, grid).status, OriginStatus::divergent);
    EXPECT_TRUE(std::isinf(log_moment(m, 1.0)));
}

TEST(Diagnostics, LogOscillation)
{
    const auto m = bi::counterexample(1.0, 3.0, Oscillation::log_reciprocal);
    EXPECT_NEAR(mass_ratio(m, std::exp(-3 * kPi / 4)), 2.0 - 1.0 / std::sqrt(2.0), 1e-8);
    const auto o = origin_density(m, default_origin_grid());
    EXPECT_EQ(o.status, OriginStatus::oscillating);
    EXPECT_LE(o.liminf, o.limsup);
    EXPECT_GE(o.liminf, 2.0 - 1.0 / std::sqrt(2.0) - 1e-6);
    EXPECT_LE(o.limsup, 2.0 + 1.0 / std::sqrt(2.0) + 1e-6);
}

TEST(Diagnostics, ReciprocalAveragesOut)
{
    const auto m = bi::counterexample(1.0, 3.0, Oscillation::reciprocal);
    EXPECT_NEAR(mass_ratio(m, 1e-4), 2.0, 1e-3);
    EXPECT_EQ(origin_density(m, default_origin_grid()).status, OriginStatus::finite);
}

TEST(Diagnostics, MovingAverageWithZeroSumVanishesAtOrigin)
{
    const auto m = bi::moving_average({1.0, -1.0});
    EXPECT_LT(mass_ratio(m, 1e-3), 1e-6);
    EXPECT_NEAR(mass_ratio(bi::moving_average({0.5, 0.5}), 1e-5), 1.0 / (2 * kPi), 1e-9);
}

TEST(Diagnostics, CurveBoundedByDensityBound)
{
    const auto m = bi::tabulated({0.0, 0.5, 1.0, 1.5, 2.0}, {0.3, 0.25, 0.2, 0.1, 0.0});
    const auto d = diagnostics(m, 0.5, default_origin_grid());
    for (const auto& [x, v] : d.mass_ratio_curve) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 0.3 + 1e-15);
    }
}

TEST(Diagnostics, RejectsBadGrids)
{
    const auto m = bi::sinc_box();
    EXPECT_THROW(diagnostics(m, 1.0, std::vector<double>{}), ArgumentError);
    EXPECT_THROW(diagnostics(m, 1.0, std::vector<double>{0.1, 0.2}), ArgumentError);
    EXPECT_THROW(diagnostics(m, 1.0, std::vector<double>{0.1, -0.2}), ArgumentError);
}

TEST(MeasureIo, RoundTripsEveryBuiltin)
{
    for (const auto& m : test::all_builtins()) {
        const auto back = measure_from_json(measure_to_json(m));
        EXPECT_EQ(back.name(), m.name());
        EXPECT_EQ(tv_distance(back, m), 0.0) << m.name();
        for (double t : {0.0, 0.6, 2.2}) {
            EXPECT_EQ(covariance(back, t), covariance(m, t)) << m.name();
        }
    }
}

TEST(MeasureIo, FoldedMeasuresRoundTrip)
{
    const auto f = fold(bi::nonconv_tail(), 0.5);
    const auto back = measure_from_json(measure_to_json(f));
    EXPECT_EQ(covariance(back, 1.5), covariance(f, 1.5));
}

TEST(MeasureIo, BuiltinNameAndInlineDocument)
{
    EXPECT_EQ(measure_from_json("sinc_box").name(), "sinc_box");
    const auto doc = nlohmann::json::parse(R"({
        "name": "mix", "scale": 2,
        "ac_parts": [{"family": "box", "params": {"height": 0.25}, "support": [1, 3]}],
        "atoms": [{"lambda": 0, "mass": 0.5}]})");
    const auto m = measure_from_json(doc);
    EXPECT_NEAR(m.total_mass(), 2.0 * (1.0 + 0.5), 1e-14);
    EXPECT_NEAR(covariance(m, 0.0), 3.0, 1e-14);
}

TEST(MeasureIo, FailsClosed)
{
    const auto bad = [](const char* text) { return measure_from_json(nlohmann::json::parse(text)); };
    EXPECT_THROW(bad(R"({"ac_parts": [], "atoms": [], "colour": 1})"), ArgumentError);
    EXPECT_THROW(bad(R"({"ac_parts": [{"family": "box", "params": {"height": -1}, "support": [0, 1]}]})"),
                 ArgumentError);
    EXPECT_THROW(bad(R"({"ac_parts": [{"family": "gauss"}]})"), ArgumentError);
    EXPECT_THROW(bad(R"({"atoms": [{"lambda": 1}]})"), ArgumentError);
    EXPECT_THROW(measure_from_json("no_such_measure"), ArgumentError);
    try {
        bad(R"({"ac_parts": [{"family": "counterexample", "params": {"a": 3, "b": 1, "mode": "reciprocal"}}]})");
        FAIL();
    } catch (const ArgumentError& e) {
        EXPECT_NE(std::string(e.what()).find("ac_parts[0]"), std::string::npos) << e.what();
    }
}

TEST(MeasureIo, FileRoundTripAndSummary)
{
    const auto dir = std::filesystem::temp_directory_path() / "pershlab_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "m.json";
    const auto m = add(bi::sinc_box(), bi::origin_atom(0.25)).named("sinc_plus_atom");
    save_measure(path, m);
    const auto back = load_measure(path);
    EXPECT_EQ(covariance(back, 0.8), covariance(m, 0.8));
    const auto d = describe_measure(back);
    EXPECT_EQ(d["name"], "sinc_plus_atom");
    EXPECT_NEAR(d["total_mass"].get<double>(), 1.25, 1e-14);
    EXPECT_EQ(d["origin_density"]["status"], "divergent");
    EXPECT_THROW(load_measure(dir / "missing.json"), ArgumentError);
    std::filesystem::remove_all(dir);
}

} // namespace
