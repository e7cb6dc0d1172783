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

#include "pershlab/sampler/series.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "pershlab/error.hpp"
#include "pershlab/parallel.hpp"
#include "pershlab/sampler/philox.hpp"

namespace pershlab::sampler {

SeriesDecomposition SeriesDecomposition::build(const spectral::SpectralMeasure& measure, double delta,
                                               std::size_t n_points, const SeriesOptions& options)
{
    if (!(delta > 0.0) || n_points < 1) {
        throw ArgumentError("series: need delta > 0 and at least one point");
    }
    if (measure.is_zero()) {
        throw ArgumentError("series: zero measure");
    }
    const double radius = options.radius.value_or(measure.support_radius());
    if (!std::isfinite(radius)) {
        throw UnsupportedError("series: measure does not have compact support");
    }
    if (radius < measure.support_radius()) {
        throw ArgumentError("series: radius is smaller than the support radius");
    }

    SeriesDecomposition d;
    d.radius_ = radius;
    d.delta_ = delta;
    d.n_points_ = n_points;
    d.horizon_ = static_cast<double>(n_points - 1) * delta;
    d.mass_ = measure.total_mass();
    for (const auto& a : measure.atoms()) {
        if (a.lambda == 0.0) {
            d.origin_mass_ += measure.scale() * a.mass;
        }
    }

    std::size_t n = 1;
    if (options.n_intervals) {
        n = *options.n_intervals;
        if (n < 1) {
            throw ArgumentError("series: need at least one interval");
        }
    } else {
        if (!(options.target_remainder_variance > 0.0)) {
            throw ArgumentError("series: target remainder variance must be positive");
        }
        const double x = radius * d.horizon_ *
                         std::sqrt(d.mass_ / (2.0 * options.target_remainder_variance));
        n = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(x)));
    }
    d.n_intervals_ = n;

    // positive-half masses and trigonometric moments of each interval
    const double width = radius / static_cast<double>(n);
    std::vector<double> half_mass(n, 0.0);
    Eigen::MatrixXd cos_m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n_points), static_cast<Eigen::Index>(n));
    Eigen::MatrixXd sin_m = cos_m;
    if (radius > 0.0) {
        parallel_for_chunks(n, 16, [&](std::size_t b, std::size_t e) {
            for (std::size_t j = b; j < e; ++j) {
                const double lo = static_cast<double>(j) * width;
                const double hi = j + 1 == n ? radius : static_cast<double>(j + 1) * width;
                double m = 0.0;
                for (const auto& p : measure.pieces()) {
                    m += p.positive_mass(lo, hi);
                }
                std::vector<const spectral::Atom*> inside;
                for (const auto& a : measure.atoms()) {
                    if (a.lambda > lo && a.lambda <= hi) {
                        inside.push_back(&a);
                        m += 0.5 * a.mass;
                    }
                }
                half_mass[j] = measure.scale() * m;
                if (!(half_mass[j] > 0.0)) {
                    continue;
                }
                for (std::size_t k = 0; k < n_points; ++k) {
                    const double t = static_cast<double>(k) * delta;
                    double c = 0.0;
                    double s = 0.0;
                    for (const auto& p : measure.pieces()) {
                        const auto [pc, ps] = p.trig_moments(lo, hi, t);
                        c += pc;
                        s += ps;
                    }
                    for (const auto* a : inside) {
                        c += 0.5 * a->mass * std::cos(a->lambda * t);
                        s += 0.5 * a->mass * std::sin(a->lambda * t);
                    }
                    const auto kk = static_cast<Eigen::Index>(k);
                    const auto jj = static_cast<Eigen::Index>(j);
                    cos_m(kk, jj) = measure.scale() * c / half_mass[j];
                    sin_m(kk, jj) = measure.scale() * s / half_mass[j];
                }
            }
        });
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (half_mass[j] > 0.0) {
            d.index_.push_back(j + 1);
            d.weights_.push_back(2.0 * half_mass[j]);
        }
    }
    const auto cols = static_cast<Eigen::Index>(d.index_.size());
    d.c_.resize(static_cast<Eigen::Index>(n_points), cols);
    d.s_.resize(static_cast<Eigen::Index>(n_points), cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
        const auto j = static_cast<Eigen::Index>(d.index_[static_cast<std::size_t>(c)] - 1);
        d.c_.col(c) = cos_m.col(j);
        d.s_.col(c) = sin_m.col(j);
    }

    std::vector<double> r(n_points);
    for (std::size_t k = 0; k < n_points; ++k) {
        r[k] = measure.covariance(static_cast<double>(k) * delta);
    }
    d.target_.resize(static_cast<Eigen::Index>(n_points), static_cast<Eigen::Index>(n_points));
    for (std::size_t i = 0; i < n_points; ++i) {
        for (std::size_t j = 0; j < n_points; ++j) {
            d.target_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                r[i > j ? i - j : j - i];
        }
    }
    const Eigen::MatrixXd series = d.series_covariance();
    d.remainder_variance_ = 0.0;
    for (Eigen::Index k = 0; k < series.rows(); ++k) {
        d.remainder_variance_ = std::max(d.remainder_variance_, d.target_(k, k) - series(k, k));
    }
    return d;
}

double SeriesDecomposition::remainder_bound() const
{
    const double x = radius_ * horizon_ / static_cast<double>(n_intervals_);
    return 0.5 * x * x * mass_;
}

double SeriesDecomposition::max_component_norm() const
{
    double m = 0.0;
    for (Eigen::Index j = 0; j < c_.cols(); ++j) {
        for (Eigen::Index k = 0; k < c_.rows(); ++k) {
            m = std::max(m, c_(k, j) * c_(k, j) + s_(k, j) * s_(k, j));
        }
    }
    return m;
}

Eigen::MatrixXd SeriesDecomposition::series_covariance() const
{
    const auto n = static_cast<Eigen::Index>(n_points_);
    Eigen::MatrixXd cov = Eigen::MatrixXd::Constant(n, n, origin_mass_);
    for (Eigen::Index j = 0; j < c_.cols(); ++j) {
        const double w = weights_[static_cast<std::size_t>(j)];
        cov.noalias() += w * (c_.col(j) * c_.col(j).transpose() + s_.col(j) * s_.col(j).transpose());
    }
    return cov;
}

SeriesGenerator::SeriesGenerator(SeriesDecomposition decomposition, bool exact_remainder,
                                 std::uint32_t stream)
    : dec_(std::move(decomposition)), exact_(exact_remainder), stream_(stream)
{
    const auto n = static_cast<Eigen::Index>(dec_.n_points());
    const Eigen::Index terms = dec_.cosine_components().cols();
    basis_.resize(n, 2 * terms + 1);
    for (Eigen::Index j = 0; j < terms; ++j) {
        const double a = std::sqrt(dec_.weights()[static_cast<std::size_t>(j)]);
        basis_.col(2 * j) = a * dec_.cosine_components().col(j);
        basis_.col(2 * j + 1) = a * dec_.sine_components().col(j);
    }
    basis_.col(2 * terms).setConstant(std::sqrt(dec_.origin_atom_mass()));

    if (exact_) {
        const Eigen::MatrixXd gap = dec_.target_covariance() - dec_.series_covariance();
        const double r0 = dec_.target_covariance()(0, 0);
        for (int k = 0; k < 7; ++k) {
            const double jitter = 1e-12 * r0 * std::pow(4.0, k);
            Eigen::LLT<Eigen::MatrixXd> llt(gap + jitter * Eigen::MatrixXd::Identity(n, n));
            if (llt.info() == Eigen::Success) {
                remainder_factor_ = llt.matrixL();
                return;
            }
        }
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gap, Eigen::EigenvaluesOnly);
        throw NumericalError("series: remainder covariance is not positive semidefinite",
                             es.eigenvalues().minCoeff());
    }
}

std::string SeriesGenerator::tag() const
{
    return "series(" + std::to_string(dec_.n_intervals()) + (exact_ ? ",exact)" : ")");
}

void SeriesGenerator::generate(std::uint64_t seed, std::uint64_t first, std::size_t count,
                               std::span<double> out) const
{
    const auto n = static_cast<std::size_t>(basis_.rows());
    const auto m = static_cast<std::size_t>(basis_.cols());
    std::vector<double> z(m);
    std::vector<double> zr(exact_ ? n : 0);
    for (std::size_t p = 0; p < count; ++p) {
        NormalStream(seed, first + p, stream_).fill(z);
        double* row = out.data() + p * n;
        std::fill(row, row + n, 0.0);
        for (std::size_t j = 0; j < m; ++j) {
            const double zj = z[j];
            for (std::size_t k = 0; k < n; ++k) {
                row[k] += basis_(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) * zj;
            }
        }
        if (exact_) {
            NormalStream(seed, first + p, stream_ + 1).fill(zr);
            for (std::size_t c = 0; c < n; ++c) {
                for (std::size_t r = c; r < n; ++r) {
                    row[r] += remainder_factor_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * zr[c];
                }
            }
        }
    }
}

std::shared_ptr<const SeriesGenerator> make_series_generator(const spectral::SpectralMeasure& measure,
                                                             double delta, std::size_t n_points,
                                                             const SeriesOptions& options)
{
    return std::make_shared<const SeriesGenerator>(
        SeriesDecomposition::build(measure, delta, n_points, options), options.exact_remainder,
        options.stream);
}

} // namespace pershlab::sampler
