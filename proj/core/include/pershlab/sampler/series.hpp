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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "pershlab/sampler/generators.hpp"
#include "pershlab/spectral/measure.hpp"

namespace pershlab::sampler {

struct SeriesOptions {
    // Explicit number of intervals; otherwise chosen from the target.
    std::optional<std::size_t> n_intervals{};
    // Target for the remainder variance bound (1/2)(D T / n)^2 rho([-D, D]).
    double target_remainder_variance = 0.0;
    // Support radius D; defaults to the measure's support radius.
    std::optional<double> radius{};
    // Add an independent Gaussian remainder so the paths are exact.
    bool exact_remainder = false;
    std::uint32_t stream = 0;
};

/// Interval decomposition of a compactly supported measure on [-D, D]:
/// I_1 = [0, D/n], I_j = ((j - 1) D/n, j D/n], mirrored to the negative
/// half. An atom at the origin is kept as its own term.
class SeriesDecomposition {
public:
    static SeriesDecomposition build(const spectral::SpectralMeasure& measure, double delta,
                                     std::size_t n_points, const SeriesOptions& options);

    double radius() const { return radius_; }
    double horizon() const { return horizon_; }
    double delta() const { return delta_; }
    std::size_t n_points() const { return n_points_; }
    std::size_t n_intervals() const { return n_intervals_; }
    double support_mass() const { return mass_; }
    double origin_atom_mass() const { return origin_mass_; }

    /// Interval index j (1-based) and weight rho(I_j u I_-j) for each
    /// interval that carries mass.
    const std::vector<std::size_t>& intervals() const { return index_; }
    const std::vector<double>& weights() const { return weights_; }

    /// C_j(t_k) and S_j(t_k): rows are grid points, columns follow intervals().
    const Eigen::MatrixXd& cosine_components() const { return c_; }
    const Eigen::MatrixXd& sine_components() const { return s_; }

    /// (1/2)(D T / n)^2 rho([-D, D]).
    double remainder_bound() const;

    /// max over the grid of r(0) - var(series(t)), the exact remainder variance.
    double remainder_variance() const { return remainder_variance_; }

    /// max over intervals and grid of C_j^2 + S_j^2.
    double max_component_norm() const;

    /// Covariance matrix of the series (without remainder) on the grid.
    Eigen::MatrixXd series_covariance() const;

    /// Grid covariance r((k - l) delta) of the measure.
    const Eigen::MatrixXd& target_covariance() const { return target_; }

private:
    double radius_ = 0.0;
    double horizon_ = 0.0;
    double delta_ = 0.0;
    std::size_t n_points_ = 0;
    std::size_t n_intervals_ = 0;
    double mass_ = 0.0;
    double origin_mass_ = 0.0;
    std::vector<std::size_t> index_;
    std::vector<double> weights_;
    Eigen::MatrixXd c_;
    Eigen::MatrixXd s_;
    Eigen::MatrixXd target_;
    double remainder_variance_ = 0.0;
};

/// Paths sum_j sqrt(w_j) (zeta_j C_j(t) + eta_j S_j(t)) (+ origin atom term),
/// optionally plus an independent exact remainder drawn by Cholesky from
/// the covariance gap.
class SeriesGenerator final : public PathGenerator {
public:
    SeriesGenerator(SeriesDecomposition decomposition, bool exact_remainder, std::uint32_t stream);

    std::size_t n_points() const override { return dec_.n_points(); }
    double delta() const override { return dec_.delta(); }
    std::string tag() const override;
    void generate(std::uint64_t seed, std::uint64_t first, std::size_t count,
                  std::span<double> out) const override;

    const SeriesDecomposition& decomposition() const { return dec_; }
    bool exact_remainder() const { return exact_; }

private:
    SeriesDecomposition dec_;
    bool exact_;
    std::uint32_t stream_;
    Eigen::MatrixXd basis_;           // n_points x n_normals
    Eigen::MatrixXd remainder_factor_; // lower triangular, empty unless exact
};

std::shared_ptr<const SeriesGenerator> make_series_generator(const spectral::SpectralMeasure& measure,
                                                             double delta, std::size_t n_points,
                                                             const SeriesOptions& options);

} // namespace pershlab::sampler
