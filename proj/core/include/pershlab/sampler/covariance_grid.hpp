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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "pershlab/spectral/measure.hpp"

namespace pershlab::sampler {

enum class FactorizationKind { circulant, cholesky };

struct GridOptions {
    bool allow_circulant = true;
    double eigenvalue_tolerance = 1e-8; // relative to r(0)
    double jitter_base = 1e-12;         // relative to r(0)
    int jitter_steps = 7;               // jitter_base * 4^k, k = 0..6
};

class FftPlan;

/// r(0), r(delta), ..., r((n - 1) delta) with a factorization of the
/// Toeplitz matrix: circulant embedding when its spectrum is nonnegative
/// up to tolerance, otherwise Cholesky with escalating jitter.
class CovarianceGrid {
public:
    /// Evaluates the covariance of `measure` on the grid and factorizes.
    /// The circulant embedding has size m = smallest power of two
    /// >= 2 (n - 1), using r(k delta) for k <= m / 2.
    static CovarianceGrid build(const spectral::SpectralMeasure& measure, double delta,
                                std::size_t n_points, const GridOptions& options = {});

    /// Factorizes given covariance values r(k delta), k = 0..n-1. The
    /// circulant embedding uses the minimal size 2 (n - 1).
    static CovarianceGrid from_values(std::vector<double> r_values, double delta,
                                      const GridOptions& options = {});

    double delta() const { return delta_; }
    std::size_t n_points() const { return r_.size(); }
    const std::vector<double>& r_values() const { return r_; }
    FactorizationKind kind() const { return kind_; }

    /// Circulant data: embedding size and eigenvalues (after clamping).
    std::size_t embedding_size() const { return embedding_.size(); }
    const std::vector<double>& embedding_eigenvalues() const { return eigen_; }
    double min_embedding_eigenvalue() const { return min_eigen_; }
    double clamped_mass() const { return clamped_; }

    /// Cholesky data.
    const Eigen::MatrixXd& cholesky_factor() const { return factor_; }
    double jitter() const { return jitter_; }

    Eigen::MatrixXd toeplitz() const;

    /// Writes paths [first, first + count) generated with normals keyed by
    /// (seed, index, stream) into `out` (row-major, count x n_points).
    /// Cholesky: path i = L z_i. Circulant: paths 2j and 2j + 1 are the real
    /// and imaginary parts of one FFT driven by the normals of index j.
    void sample(std::uint64_t seed, std::uint32_t stream, std::uint64_t first, std::size_t count,
                std::span<double> out) const;

private:
    static CovarianceGrid factorize(std::vector<double> r, std::vector<double> embedding_row,
                                    double delta, const GridOptions& options);

    double delta_ = 0.0;
    std::vector<double> r_;
    FactorizationKind kind_ = FactorizationKind::cholesky;
    std::vector<double> embedding_;
    std::vector<double> eigen_;
    std::vector<double> sqrt_scaled_eigen_;
    double min_eigen_ = 0.0;
    double clamped_ = 0.0;
    std::shared_ptr<const FftPlan> plan_;
    Eigen::MatrixXd factor_;
    double jitter_ = 0.0;
};

} // namespace pershlab::sampler
