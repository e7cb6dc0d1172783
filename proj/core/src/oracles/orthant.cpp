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

#include "pershlab/oracles/orthant.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include <Eigen/Cholesky>

#include "pershlab/error.hpp"
#include "pershlab/oracles/gaussian.hpp"
#include "pershlab/oracles/quadrature.hpp"

namespace pershlab::oracles {

namespace {

constexpr double kCut = 9.0;

// P(lo < Z < hi) without cancellation in the far tails.
double interval_mass(double lo, double hi)
{
    if (!(lo < hi)) {
        return 0.0;
    }
    if (lo >= 0.0) {
        return normal_tail(lo) - normal_tail(hi);
    }
    if (hi <= 0.0) {
        return normal_tail(-hi) - normal_tail(-lo);
    }
    return 1.0 - normal_tail(-lo) - normal_tail(hi);
}

class NestedIntegral {
public:
    NestedIntegral(const Eigen::MatrixXd& factor, std::span<const double> lower,
                   std::span<const double> upper)
        : factor_(factor), lower_(lower), upper_(upper), dim_(static_cast<int>(factor.rows()))
    {
    }

    double operator()() { return level(0); }

private:
    double level(int i)
    {
        double shift = 0.0;
        for (int j = 0; j < i; ++j) {
            shift += factor_(i, j) * z_[j];
        }
        const double diag = factor_(i, i);
        const double lo = (lower_[i] - shift) / diag;
        const double hi = (upper_[i] - shift) / diag;
        if (i == dim_ - 1) {
            return interval_mass(lo, hi);
        }
        const double a = std::max(lo, -kCut);
        const double b = std::min(hi, kCut);
        if (!(a < b)) {
            return 0.0;
        }
        QuadratureOptions o;
        o.abs_tol = 1e-12;
        o.rel_tol = 1e-11;
        const auto inner = [this, i](double z) {
            z_[i] = z;
            return normal_pdf(z) * level(i + 1);
        };
        return integrate(inner, a, b, o).value;
    }

    const Eigen::MatrixXd& factor_;
    std::span<const double> lower_;
    std::span<const double> upper_;
    int dim_;
    std::array<double, kMaxOrthantDimension> z_{};
};

} // namespace

double gaussian_box_probability(const Eigen::MatrixXd& covariance,
                                std::span<const double> lower,
                                std::span<const double> upper)
{
    const auto d = covariance.rows();
    if (d < 1 || d > kMaxOrthantDimension || covariance.cols() != d) {
        throw ArgumentError("gaussian_box_probability: dimension must be 1..4");
    }
    if (static_cast<Eigen::Index>(lower.size()) != d || static_cast<Eigen::Index>(upper.size()) != d) {
        throw ArgumentError("gaussian_box_probability: bounds must match the dimension");
    }
    for (Eigen::Index i = 0; i < d; ++i) {
        if (std::isnan(lower[i]) || std::isnan(upper[i]) || lower[i] > upper[i]) {
            throw ArgumentError("gaussian_box_probability: need lower <= upper");
        }
    }
    if (!covariance.isApprox(covariance.transpose(), 1e-12)) {
        throw ArgumentError("gaussian_box_probability: covariance is not symmetric");
    }
    Eigen::LLT<Eigen::MatrixXd> llt(covariance);
    if (llt.info() != Eigen::Success) {
        throw ArgumentError("gaussian_box_probability: covariance is not positive definite");
    }
    const Eigen::MatrixXd factor = llt.matrixL();
    return NestedIntegral(factor, lower, upper)();
}

double gaussian_symmetric_box_probability(const Eigen::MatrixXd& covariance,
                                          std::span<const double> half_width)
{
    std::vector<double> lo(half_width.size());
    std::vector<double> hi(half_width.begin(), half_width.end());
    std::transform(hi.begin(), hi.end(), lo.begin(), [](double h) { return -h; });
    return gaussian_box_probability(covariance, lo, hi);
}

} // namespace pershlab::oracles
