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

#include "pershlab/sampler/covariance_grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <fftw3.h>

#include "pershlab/error.hpp"
#include "pershlab/parallel.hpp"
#include "pershlab/sampler/philox.hpp"

namespace pershlab::sampler {

namespace {

// FFTW planning is not thread safe; execution of an existing plan is.
std::mutex& planner_mutex()
{
    static std::mutex m;
    return m;
}

std::vector<double> circulant_eigenvalues(const std::vector<double>& row)
{
    const int m = static_cast<int>(row.size());
    std::vector<double> in(row);
    std::vector<std::complex<double>> out(static_cast<std::size_t>(m / 2 + 1));
    {
        std::lock_guard lock(planner_mutex());
        fftw_plan p = fftw_plan_dft_r2c_1d(m, in.data(), reinterpret_cast<fftw_complex*>(out.data()),
                                           FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_execute(p);
        fftw_destroy_plan(p);
    }
    std::vector<double> eig(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        eig[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k <= m / 2 ? k : m - k)].real();
    }
    return eig;
}

std::size_t next_power_of_two(std::size_t x)
{
    std::size_t p = 1;
    while (p < x) {
        p <<= 1;
    }
    return p;
}

} // namespace

class FftPlan {
public:
    explicit FftPlan(int m) : m_(m)
    {
        std::lock_guard lock(planner_mutex());
        auto* a = fftw_alloc_complex(static_cast<std::size_t>(m));
        auto* b = fftw_alloc_complex(static_cast<std::size_t>(m));
        plan_ = fftw_plan_dft_1d(m, a, b, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(a);
        fftw_free(b);
    }
    ~FftPlan()
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan_);
    }
    FftPlan(const FftPlan&) = delete;
    FftPlan& operator=(const FftPlan&) = delete;

    void execute(std::complex<double>* in, std::complex<double>* out) const
    {
        fftw_execute_dft(plan_, reinterpret_cast<fftw_complex*>(in), reinterpret_cast<fftw_complex*>(out));
    }
    int size() const { return m_; }

private:
    int m_;
    fftw_plan plan_;
};

CovarianceGrid CovarianceGrid::build(const spectral::SpectralMeasure& measure, double delta,
                                     std::size_t n_points, const GridOptions& options)
{
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw ArgumentError("build_grid: delta must be positive");
    }
    if (n_points < 1) {
        throw ArgumentError("build_grid: need at least one point");
    }
    if (!(measure.total_mass() > 0.0)) {
        throw ArgumentError("build_grid: measure has zero mass");
    }
    const std::size_t m = n_points > 1 ? next_power_of_two(2 * (n_points - 1)) : 0;
    const std::size_t count = std::max(n_points, m / 2 + 1);
    std::vector<double> values(count);
    parallel_for_chunks(count, 8, [&](std::size_t b, std::size_t e) {
        for (std::size_t k = b; k < e; ++k) {
            values[k] = measure.covariance(static_cast<double>(k) * delta);
        }
    });
    std::vector<double> row;
    if (m > 0) {
        row.resize(m);
        for (std::size_t k = 0; k <= m / 2; ++k) {
            row[k] = values[k];
            if (k > 0) {
                row[m - k] = values[k];
            }
        }
    }
    values.resize(n_points);
    return factorize(std::move(values), std::move(row), delta, options);
}

CovarianceGrid CovarianceGrid::from_values(std::vector<double> r_values, double delta,
                                           const GridOptions& options)
{
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw ArgumentError("covariance grid: delta must be positive");
    }
    if (r_values.empty()) {
        throw ArgumentError("covariance grid: need at least one value");
    }
    const std::size_t n = r_values.size();
    std::vector<double> row;
    if (n > 1) {
        const std::size_t m = 2 * (n - 1);
        row.resize(m);
        for (std::size_t k = 0; k < n; ++k) {
            row[k] = r_values[k];
            if (k > 0) {
                row[m - k] = r_values[k];
            }
        }
    }
    return factorize(std::move(r_values), std::move(row), delta, options);
}

CovarianceGrid CovarianceGrid::factorize(std::vector<double> r, std::vector<double> row,
                                         double delta, const GridOptions& options)
{
    const double r0 = r[0];
    if (!(r0 > 0.0) || !std::isfinite(r0)) {
        throw ArgumentError("covariance grid: r(0) must be positive");
    }
    for (double v : r) {
        if (!std::isfinite(v) || std::abs(v) > r0 * (1.0 + 1e-9)) {
            throw ArgumentError("covariance grid: values must satisfy |r(k)| <= r(0)");
        }
    }
    CovarianceGrid g;
    g.delta_ = delta;
    g.r_ = std::move(r);

    if (options.allow_circulant && !row.empty()) {
        std::vector<double> eig = circulant_eigenvalues(row);
        const double m = static_cast<double>(row.size());
        double min_eig = std::numeric_limits<double>::infinity();
        double clamped = 0.0;
        for (double e : eig) {
            min_eig = std::min(min_eig, e);
            clamped += std::max(0.0, -e);
        }
        if (min_eig >= -options.eigenvalue_tolerance * r0 &&
            clamped < options.eigenvalue_tolerance * r0 * m) {
            g.kind_ = FactorizationKind::circulant;
            g.min_eigen_ = min_eig;
            g.clamped_ = clamped;
            g.sqrt_scaled_eigen_.resize(eig.size());
            for (std::size_t k = 0; k < eig.size(); ++k) {
                eig[k] = std::max(eig[k], 0.0);
                g.sqrt_scaled_eigen_[k] = std::sqrt(eig[k] / m);
            }
            g.embedding_ = std::move(row);
            g.eigen_ = std::move(eig);
            g.plan_ = std::make_shared<const FftPlan>(static_cast<int>(g.embedding_.size()));
            return g;
        }
        g.min_eigen_ = min_eig;
        g.clamped_ = clamped;
    }

    const Eigen::MatrixXd t = g.toeplitz();
    const auto n = t.rows();
    for (int k = 0; k < options.jitter_steps; ++k) {
        const double jitter = options.jitter_base * r0 * std::pow(4.0, k);
        Eigen::LLT<Eigen::MatrixXd> llt(t + jitter * Eigen::MatrixXd::Identity(n, n));
        if (llt.info() == Eigen::Success) {
            g.kind_ = FactorizationKind::cholesky;
            g.factor_ = llt.matrixL();
            g.jitter_ = jitter;
            return g;
        }
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t, Eigen::EigenvaluesOnly);
    throw NumericalError("covariance grid: Cholesky failed after maximum jitter",
                         es.eigenvalues().minCoeff());
}

Eigen::MatrixXd CovarianceGrid::toeplitz() const
{
    const auto n = static_cast<Eigen::Index>(r_.size());
    Eigen::MatrixXd t(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            t(i, j) = r_[static_cast<std::size_t>(std::abs(i - j))];
        }
    }
    return t;
}

void CovarianceGrid::sample(std::uint64_t seed, std::uint32_t stream, std::uint64_t first,
                            std::size_t count, std::span<double> out) const
{
    const std::size_t n = r_.size();
    if (out.size() < count * n) {
        throw ArgumentError("sample: output buffer too small");
    }
    if (kind_ == FactorizationKind::cholesky) {
        std::vector<double> z(n);
        for (std::size_t p = 0; p < count; ++p) {
            NormalStream(seed, first + p, stream).fill(z);
            double* row = out.data() + p * n;
            std::fill(row, row + n, 0.0);
            for (std::size_t c = 0; c < n; ++c) {
                const double zc = z[c];
                for (std::size_t r = c; r < n; ++r) {
                    row[r] += factor_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * zc;
                }
            }
        }
        return;
    }
    const std::size_t m = embedding_.size();
    std::vector<double> z(2 * m);
    std::vector<std::complex<double>> w(m);
    std::vector<std::complex<double>> y(m);
    const std::uint64_t last = first + count; // exclusive
    for (std::uint64_t pair = first / 2; 2 * pair < last; ++pair) {
        NormalStream(seed, pair, stream).fill(z);
        for (std::size_t k = 0; k < m; ++k) {
            w[k] = sqrt_scaled_eigen_[k] * std::complex<double>(z[2 * k], z[2 * k + 1]);
        }
        plan_->execute(w.data(), y.data());
        for (std::uint64_t path = 2 * pair; path < 2 * pair + 2; ++path) {
            if (path < first || path >= last) {
                continue;
            }
            double* row = out.data() + (path - first) * n;
            for (std::size_t t = 0; t < n; ++t) {
                row[t] = path % 2 == 0 ? y[t].real() : y[t].imag();
            }
        }
    }
}

} // namespace pershlab::sampler
