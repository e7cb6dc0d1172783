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

// Acceptance suite: one PASS/FAIL line per criterion, exit 0 only if all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oracle_values.hpp"
#include "pershlab/estimator/experiments.hpp"
#include "pershlab/estimator/windows.hpp"
#include "pershlab/explab/config.hpp"
#include "pershlab/explab/inequality_suite.hpp"
#include "pershlab/explab/runner.hpp"
#include "pershlab/oracles/closed_forms.hpp"
#include "pershlab/oracles/gaussian.hpp"
#include "pershlab/sampler/generators.hpp"
#include "pershlab/sampler/path_batch.hpp"
#include "pershlab/sampler/series.hpp"
#include "pershlab/spectral/builtins.hpp"
#include "pershlab/spectral/operations.hpp"

namespace {

using namespace pershlab;
using nlohmann::json;
namespace bi = pershlab::spectral::builtins;
namespace est = pershlab::estimator;
namespace ov = pershlab::test::oracle;
namespace fs = std::filesystem;
constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail << "[failed: " << what << "] ";
        }
    }
};

std::string fmt(double x, int digits = 6)
{
    std::ostringstream s;
    s.precision(digits);
    s << x;
    return s.str();
}

// Criterion 1: cosine process, level 0.
void cosine_persistence(Outcome& o)
{
    const std::vector<double> levels = {0.0};
    const std::vector<double> horizons = {kPi / 4, kPi / 2, 3 * kPi / 4, kPi};
    const auto curves =
        est::exponent_curve(bi::cosine_pair(1.0, 1.0), EventKind::persistence, levels, horizons, kPi / 128, 1000000, 101);
    const auto& pts = curves.front().points;
    for (std::size_t i = 0; i < 3; ++i) {
        const double want = (kPi - horizons[i]) / (2 * kPi);
        const double z = std::abs(pts[i].p_hat - want) / pts[i].standard_error();
        o.detail << "T=" << fmt(horizons[i], 4) << " p=" << fmt(pts[i].p_hat) << " vs " << fmt(want) << " ("
                 << fmt(z, 2) << " SE); ";
        o.require(z <= 3.0, "within 3 SE at T=" + fmt(horizons[i], 4));
    }
    o.detail << "T=pi hits=" << pts[3].hits;
    o.require(pts[3].hits == 0, "zero hits at T=pi");
}

// Criterion 2: i.i.d. exponents per grid point.
void iid_exponent(Outcome& o)
{
    const auto gen = sampler::make_generator(bi::sinc_box(), 1.0, 10);
    const std::vector<est::WindowQuery> q = {{0, 10, 1, EventKind::persistence}, {0, 10, 1, EventKind::ball}};
    const auto stats = est::collect_statistics(*gen, 202, 1000000, q);
    const est::LevelSweep pers(EventKind::persistence, stats[0]);
    const est::LevelSweep ball(EventKind::ball, stats[1]);
    const double theta = -std::log(pers.p_hat(0.0)) / 10.0;
    const double psi = -std::log(ball.p_hat(1.0)) / 10.0;
    o.detail << "theta=" << fmt(theta) << " (|-ln2|=" << fmt(std::abs(theta - std::log(2.0)), 3) << ") psi=" << fmt(psi)
             << " (|-0.381657|=" << fmt(std::abs(psi - 0.381657), 3) << ", exact " << fmt(ov::kIidBallExponent) << ")";
    o.require(std::abs(theta - std::log(2.0)) <= 0.01, "theta within 0.01 of ln 2");
    o.require(std::abs(psi - 0.381657) <= 0.005, "psi within 0.005 of 0.381657");
}

// Criterion 3: lag covariances of every builtin on a 64-point grid.
void covariance_reproduction(Outcome& o)
{
    double worst = 0.0;
    std::string worst_name;
    for (const auto& name : bi::names()) {
        const auto m = bi::by_name(name);
        const double delta = name == "ma_density" ? 1.0 : 0.5;
        const auto gen = sampler::make_generator(m, delta, 64);
        for (const auto& l : est::lag_covariances(*gen, 303, 100000, 63)) {
            const double z = std::abs(l.value - spectral::covariance(m, double(l.lag) * delta)) / l.standard_error;
            if (z > worst) {
                worst = z;
                worst_name = name + " lag " + std::to_string(l.lag);
            }
        }
    }
    o.detail << bi::names().size() << " families, worst " << fmt(worst, 3) << " SE (" << worst_name << ")";
    o.require(worst <= 5.0, "all lags within 5 SE");
}

// Criterion 4: recorded series bound and covariance error.
void series_bound(Outcome& o)
{
    const auto m = bi::sinc_box();
    const auto gen = sampler::make_series_generator(m, 0.5, 21, {.n_intervals = 1000});
    const auto& dec = gen->decomposition();
    const double expected = 0.5 * std::pow(kPi * 10.0 / 1000.0, 2) * m.total_mass();
    o.detail << "D=" << fmt(dec.radius()) << " T=" << fmt(dec.horizon()) << " n=" << dec.n_intervals()
             << " bound=" << fmt(dec.remainder_bound(), 8) << "; ";
    o.require(dec.remainder_bound() == expected, "bound equals (1/2)(pi 10/1000)^2 mass");
    o.require(std::abs(dec.remainder_bound() - 4.9348e-4) < 5e-9, "bound rounds to 4.9348e-4");
    double worst = 0.0;
    for (const auto& l : est::lag_covariances(*gen, 404, 50000, 20)) {
        const double err = std::abs(l.value - spectral::covariance(m, 0.5 * double(l.lag)));
        const double allowed = dec.remainder_bound() + 5 * l.standard_error;
        worst = std::max(worst, err / allowed);
    }
    o.detail << "max error / (bound + 5 SE) = " << fmt(worst, 3);
    o.require(worst <= 1.0, "covariance error within bound + 5 SE");
}

// Criterion 5: paired comparisons and orthant Khatri-Sidak checks.
void comparison_suite(Outcome& o)
{
    struct Fixture {
        std::string name;
        spectral::SpectralMeasure rho;
        spectral::SpectralMeasure nu;
        EventKind kind;
        double level;
        est::Direction direction;
    };
    const std::vector<Fixture> fixtures = {
        {"monotone_ball_atom_pair", bi::sinc_box(), bi::cosine_pair(1.0, 0.5), EventKind::ball, 1.0,
         est::Direction::b_at_most_a},
        {"slepian_origin_atom", bi::sinc_box(), bi::origin_atom(1.0), EventKind::persistence, 0.0,
         est::Direction::b_at_least_a},
        {"anderson_origin_atom", bi::sinc_box(), bi::origin_atom(1.0), EventKind::ball, 1.0,
         est::Direction::b_at_most_a},
    };
    std::uint64_t seed = 505;
    for (const auto& f : fixtures) {
        const auto v = est::paired_comparison(f.rho, f.nu, f.kind, f.level, 2.0, 1.0 / 16, 1000000, seed++, f.direction);
        o.detail << f.name << " p_a=" << fmt(v.a.p_hat) << " p_b=" << fmt(v.b.p_hat) << "; ";
        o.require(v.holds, f.name);
    }

    // Khatri-Sidak by Monte Carlo: joint ball probability >= product of marginals.
    const auto gen = sampler::make_generator(bi::sinc_box(), 1.0 / 16, 17);
    const auto batch = sampler::sample_batch(*gen, seed, 1000000);
    const auto e = est::ball_estimate(batch, 2.0, 17);
    const double product = std::pow(oracles::normal_abs_within(2.0), 17);
    o.detail << "khatri_sidak_mc p=" << fmt(e.p_hat) << " >= " << fmt(product) << "; ";
    o.require(e.p_hat + 1.96 * e.standard_error() >= product, "Khatri-Sidak MC");

    int ks = 0;
    for (const auto& c : explab::run_inequality_suite()) {
        if (c.name.rfind("khatri_sidak", 0) == 0) {
            ++ks;
            o.require(c.holds && c.slack <= 1e-6, c.name);
        }
    }
    o.detail << ks << " orthant Khatri-Sidak checks";
    o.require(ks > 0, "orthant checks present");
}

// Criterion 6: smoothing inequality.
void smoothing(Outcome& o)
{
    const auto v = est::smoothing_check(bi::sinc_box(), bi::box(0.1, 2.0, 3.0), 2.0, 0.0, 4.0, 1.0 / 16, 1000000, 606);
    o.detail << "left P(T+a)=" << fmt(v.left.p_hat) << " right P(T)=" << fmt(v.right.p_hat) << " tol=" << fmt(v.tolerance, 3);
    o.require(v.holds, "left <= right within combined CI");
}

// Criterion 7: coupled grid refinement.
void sampling_convergence(Outcome& o)
{
    const std::vector<double> deltas = {1.0, 0.5, 0.25, 0.125};
    const auto e = est::sampled_exponent(bi::sinc_box(), EventKind::ball, 1.0, 8.0, deltas, 1000000, 707);
    std::vector<double> gaps;
    for (std::size_t i = 0; i < e.size(); ++i) {
        o.detail << "d=" << fmt(e[i].delta) << " psi=" << fmt(e[i].theta_hat, 5) << "; ";
        if (i > 0) {
            o.require(e[i].hits <= e[i - 1].hits, "hits nonincreasing at delta " + fmt(e[i].delta));
            o.require(e[i].theta_hat >= e[i - 1].theta_hat, "psi monotone at delta " + fmt(e[i].delta));
            gaps.push_back(e[i].theta_hat - e[i - 1].theta_hat);
        }
    }
    for (std::size_t i = 1; i < gaps.size(); ++i) {
        o.require(gaps[i] < gaps[i - 1], "gap " + std::to_string(i) + " shrinks");
    }
}

json counterexample_config()
{
    return {{"experiment", "counterexample"}, {"counterexample", {{"a", 1}, {"b", 3}}},
            {"event", "persistence"},         {"levels", {0}},
            {"horizons", {1, 2, 4}},          {"delta", 0.125},
            {"n_paths", 100000},              {"seed", 808},
            {"output", {{"stem", "counterexample"}}}};
}

// Criterion 8: counterexample diagnostics.
void counterexample(Outcome& o)
{
    const auto r = explab::run_experiment(explab::config_from_json(counterexample_config()));
    for (const auto& v : r.verdicts) {
        o.detail << v.name << ": " << v.detail << "; ";
        o.require(v.holds, v.name);
    }
    o.require(r.verdicts.size() == 2, "two verdicts");
    const auto& rec = r.summary.at("modes").at("reciprocal");
    o.require(rec.at("claimed_extremes_discrepancy").get<bool>() && rec.contains("note"), "discrepancy flagged");
    int log_rows = 0;
    int rec_rows = 0;
    for (const auto& row : r.rows) {
        const auto s = explab::series_of(row);
        log_rows += s == "counterexample_log";
        rec_rows += s == "counterexample_reciprocal";
    }
    o.detail << "theta rows " << log_rows << "+" << rec_rows;
    o.require(log_rows == 3 && rec_rows == 3, "theta curves for both modes");
}

// Criterion 9: an origin atom drives theta down.
void origin_blowup(Outcome& o)
{
    const auto m = spectral::add(bi::sinc_box(), bi::origin_atom(1.0));
    const std::vector<double> levels = {0.0};
    const std::vector<double> horizons = {4.0, 8.0, 16.0};
    const auto c = est::exponent_curve(m, EventKind::persistence, levels, horizons, 0.125, 1000000, 909);
    const auto& p = c.front().points;
    for (std::size_t i = 0; i < p.size(); ++i) {
        o.detail << "T=" << fmt(p[i].horizon) << " theta=" << fmt(p[i].theta_hat, 5) << " [" << fmt(p[i].theta_lo, 5)
                 << ", " << fmt(p[i].theta_hi, 5) << "]; ";
        if (i > 0) {
            o.require(p[i].theta_hi < p[i - 1].theta_lo, "CI separation at T=" + fmt(p[i].horizon));
        }
    }
}

// Criterion 10: Gaussian tail bounds against the scalar oracle.
void gaussian_tails(Outcome& o)
{
    const double tails[][2] = {{2.0, ov::kNormalTail2}, {2.5, ov::kNormalTail2p5}, {3.0, ov::kNormalTail3}, {4.0, ov::kNormalTail4}};
    double worst = 0.0;
    for (const auto& [x, want] : tails) {
        const auto b = oracles::exponential_tail_bounds(x);
        worst = std::max(worst, std::abs(b.value - want) / want);
        o.require(std::exp(-x * x) <= want && want <= std::exp(-x * x / 2), "exponential bounds at " + fmt(x));
        o.require(b.holds(), "oracle bounds at " + fmt(x));
    }
    const double balls[][2] = {{0.1, ov::kNormalAbsWithin0p1}, {0.5, ov::kNormalAbsWithin0p5}, {1.0, ov::kNormalAbsWithin1}};
    for (const auto& [x, want] : balls) {
        const auto b = oracles::small_ball_bounds(x);
        worst = std::max(worst, std::abs(b.value - want) / want);
        o.require(std::sqrt(2 / kPi) * x * std::exp(-x * x / 2) <= want && want <= x, "small-ball bounds at " + fmt(x));
        o.require(b.holds(), "oracle small-ball bounds at " + fmt(x));
    }
    o.detail << "7 points, oracle max relative error " << fmt(worst, 3);
    o.require(worst <= 1e-14, "oracle at machine precision");
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Criterion 11: identical configs give identical CSV and SVG bytes.
void determinism(Outcome& o)
{
    const std::vector<json> configs = {
        {{"experiment", "exponent_curve"}, {"measure", {{"atoms", {{{"lambda", 1}, {"mass", 1}}}}}},
         {"levels", {0}}, {"horizons", {kPi / 4, kPi / 2, 3 * kPi / 4, kPi}}, {"delta", kPi / 128},
         {"n_paths", 200000}, {"seed", 101}},
        {{"experiment", "delta_sweep"}, {"measure", "sinc_box"}, {"event", "ball"}, {"levels", {1}},
         {"horizons", {8}}, {"deltas", {1, 0.5, 0.25, 0.125}}, {"n_paths", 200000}, {"seed", 707}},
        counterexample_config(),
    };
    const auto root = fs::temp_directory_path() / "pershlab_acceptance";
    fs::remove_all(root);
    for (const auto& doc : configs) {
        std::vector<std::string> bytes[2];
        for (int run = 0; run < 2; ++run) {
            explab::RunOptions opt;
            opt.out_dir = root / std::to_string(run);
            opt.plot = true;
            std::ostringstream log;
            const auto out = explab::run(explab::config_from_json(doc), opt, log);
            for (const auto& f : out.files) {
                if (f.extension() == ".csv" || f.extension() == ".svg") {
                    bytes[run].push_back(slurp(f));
                }
            }
        }
        const std::string name = doc.at("experiment").get<std::string>();
        o.detail << name << " " << bytes[0].size() << " files; ";
        o.require(bytes[0].size() == 2 && bytes[0] == bytes[1], name + " byte-identical");
    }
    fs::remove_all(root);
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"C1 cosine-process persistence", cosine_persistence},
        {"C2 iid exponents", iid_exponent},
        {"C3 covariance reproduction", covariance_reproduction},
        {"C4 series remainder bound", series_bound},
        {"C5 comparison suite", comparison_suite},
        {"C6 smoothing inequality", smoothing},
        {"C7 sampling convergence", sampling_convergence},
        {"C8 counterexample diagnostics", counterexample},
        {"C9 origin blow-up", origin_blowup},
        {"C10 Gaussian tail bounds", gaussian_tails},
        {"C11 determinism", determinism},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            fn(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !o.pass;
        std::printf("%s %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs, o.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
