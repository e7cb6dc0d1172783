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

#include "pershlab/explab/inequality_suite.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Core>

#include "pershlab/oracles/closed_forms.hpp"
#include "pershlab/oracles/gaussian.hpp"
#include "pershlab/oracles/orthant.hpp"

namespace pershlab::explab {

namespace {

constexpr double kOrthantSlack = 1e-6;
constexpr double kInf = std::numeric_limits<double>::infinity();

InequalityCheck check(std::string name, std::string relation, double lhs, double rhs,
                      double slack)
{
    bool holds = false;
    if (relation == "<=") {
        holds = lhs <= rhs + slack;
    } else if (relation == ">=") {
        holds = lhs >= rhs - slack;
    } else {
        holds = std::abs(lhs - rhs) <= slack;
    }
    return {std::move(name), std::move(relation), lhs, rhs, slack, holds};
}

Eigen::MatrixXd equicorrelated(int d, double c)
{
    Eigen::MatrixXd m = Eigen::MatrixXd::Constant(d, d, c);
    m.diagonal().setOnes();
    return m;
}

Eigen::MatrixXd toeplitz(int d, double (*r)(int))
{
    Eigen::MatrixXd m(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            m(i, j) = r(std::abs(i - j));
        }
    }
    return m;
}

// sinc process sampled at spacing 1/2: r(k) = sin(pi k / 2) / (pi k / 2).
double sinc_half(int k)
{
    if (k == 0) {
        return 1.0;
    }
    const double x = std::numbers::pi * k / 2.0;
    return std::sin(x) / x;
}

double ar06(int k)
{
    return std::pow(0.6, k);
}

double symmetric_box(const Eigen::MatrixXd& cov, double level)
{
    const std::vector<double> w(static_cast<std::size_t>(cov.rows()), level);
    return oracles::gaussian_symmetric_box_probability(cov, w);
}

double upper_orthant(const Eigen::MatrixXd& cov, double level)
{
    const std::vector<double> lo(static_cast<std::size_t>(cov.rows()), level);
    const std::vector<double> hi(lo.size(), kInf);
    return oracles::gaussian_box_probability(cov, lo, hi);
}

double marginal_product(const Eigen::MatrixXd& cov, double level)
{
    double p = 1.0;
    for (Eigen::Index i = 0; i < cov.rows(); ++i) {
        p *= oracles::normal_abs_within(level / std::sqrt(cov(i, i)));
    }
    return p;
}

} // namespace

std::vector<InequalityCheck> run_inequality_suite(bool inject_failure)
{
    std::vector<InequalityCheck> out;
    const auto x_name = [](const char* what, double x) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s x=%g", what, x);
        return std::string(buf);
    };

    for (double x : {2.0, 2.5, 3.0, 4.0}) {
        const auto m = oracles::mills_tail_bounds(x);
        out.push_back(check(x_name("tail_mills_lower", x), "<=", m.lower, m.value, 0.0));
        out.push_back(check(x_name("tail_mills_upper", x), "<=", m.value, m.upper, 0.0));
        const auto e = oracles::exponential_tail_bounds(x);
        out.push_back(check(x_name("tail_exp_lower", x), "<=", e.lower, e.value, 0.0));
        out.push_back(check(x_name("tail_exp_upper", x), "<=", e.value, e.upper, 0.0));
    }
    for (double x : {0.1, 0.5, 1.0}) {
        const auto s = oracles::small_ball_bounds(x);
        out.push_back(check(x_name("small_ball_lower", x), "<=", s.lower, s.value, 0.0));
        out.push_back(check(x_name("small_ball_upper", x), "<=", s.value, s.upper, 0.0));
        const auto l = oracles::linear_small_ball_bounds(x);
        out.push_back(check(x_name("small_ball_linear_lower", x), "<=", l.lower, l.value, 0.0));
    }

    struct Case {
        const char* name;
        Eigen::MatrixXd cov;
    };
    Eigen::MatrixXd neg(2, 2);
    neg << 1.0, -0.7, -0.7, 1.0;
    const std::vector<Case> cases{
        {"equi2_0.5", equicorrelated(2, 0.5)},
        {"anti2_-0.7", neg},
        {"ar3_0.6", toeplitz(3, ar06)},
        {"equi4_0.3", equicorrelated(4, 0.3)},
        {"sinc4_half", toeplitz(4, sinc_half)},
    };
    for (const auto& c : cases) {
        for (double level : {0.5, 1.0}) {
            const std::string tag = std::string(c.name) + " level=" + (level == 1.0 ? "1" : "0.5");
            out.push_back(check("khatri_sidak " + tag, ">=", symmetric_box(c.cov, level),
                                marginal_product(c.cov, level), kOrthantSlack));
        }
    }

    // Slepian: larger correlations, equal variances, larger upper orthant.
    for (int d : {2, 3, 4}) {
        for (double level : {0.0, 0.5}) {
            const std::string tag = "d=" + std::to_string(d) + (level == 0.0 ? " level=0" : " level=0.5");
            out.push_back(check("slepian " + tag, ">=", upper_orthant(equicorrelated(d, 0.6), level),
                                upper_orthant(equicorrelated(d, 0.2), level), kOrthantSlack));
        }
    }

    // Anderson: adding an independent centered component (an atom at the
    // origin raises every covariance entry by m) shrinks symmetric boxes.
    for (double m : {0.25, 1.0}) {
        const Eigen::MatrixXd base = toeplitz(3, sinc_half);
        const Eigen::MatrixXd more = base + Eigen::MatrixXd::Constant(3, 3, m);
        out.push_back(check("anderson sinc3_half atom=" + std::string(m == 1.0 ? "1" : "0.25"), "<=",
                            symmetric_box(more, 1.0), symmetric_box(base, 1.0), kOrthantSlack));
    }

    // Gaussian correlation: joint box >= product over two blocks.
    const std::vector<Case> blocks{{"sinc4_half", toeplitz(4, sinc_half)},
                                   {"ar4_0.6", toeplitz(4, ar06)}};
    for (const auto& c : blocks) {
        const double joint = symmetric_box(c.cov, 1.0);
        const double split = symmetric_box(c.cov.topLeftCorner(2, 2), 1.0) *
                             symmetric_box(c.cov.bottomRightCorner(2, 2), 1.0);
        out.push_back(check(std::string("gaussian_correlation ") + c.name, ">=", joint, split,
                            kOrthantSlack));
    }

    // P(inf f > l) = P(sup f < -l) for the cosine process, two independent routes.
    for (double level : {0.0, 0.3, -0.5}) {
        for (double t : {0.5, std::numbers::pi / 2, 2.5}) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "cosine_symmetry level=%g T=%.4f", level, t);
            out.push_back(check(buf, "==", oracles::cosine_process_persistence(level, t),
                                oracles::cosine_process_stays_below(-level, t), 1e-12));
        }
    }

    if (inject_failure) {
        const auto cov = equicorrelated(2, 0.5);
        out.push_back(check("injected_reversed_khatri_sidak", "<=", symmetric_box(cov, 1.0),
                            marginal_product(cov, 1.0), 0.0));
    }
    return out;
}

} // namespace pershlab::explab
