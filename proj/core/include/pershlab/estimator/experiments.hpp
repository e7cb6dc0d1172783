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
#include <span>
#include <vector>

#include "pershlab/estimator/estimate.hpp"
#include "pershlab/events.hpp"
#include "pershlab/sampler/generators.hpp"
#include "pershlab/sampler/path_batch.hpp"
#include "pershlab/spectral/measure.hpp"
#include "pershlab/spectral/multiplier.hpp"

namespace pershlab::estimator {

/// Grid points covering [0, horizon]: horizon / delta + 1. The horizon must
/// be an integer multiple of delta (relative tolerance 1e-9).
std::size_t horizon_points(double horizon, double delta);

/// Estimates over the first horizon_points values of each path, with
/// T = (horizon_points - 1) delta. Throws ArgumentError when the window
/// exceeds the batch, and for ball levels <= 0.
ExponentEstimate persistence_estimate(const sampler::PathBatch& batch, double level,
                                      std::size_t horizon_points);
ExponentEstimate ball_estimate(const sampler::PathBatch& batch, double level,
                               std::size_t horizon_points);

struct ExponentCurve {
    EventKind kind = EventKind::persistence;
    double level = 0.0;
    std::vector<ExponentEstimate> points;
    /// max |theta(T_i) - theta(T_{i-1})| over the last three horizons; NaN
    /// with fewer than two. A heuristic, not a certified limit.
    double stabilization = 0.0;
};

/// One batch simulated up to the largest horizon; smaller horizons use
/// prefix windows of the same paths.
std::vector<ExponentCurve> exponent_curve(const sampler::PathGenerator& generator, EventKind kind,
                                          std::span<const double> levels,
                                          std::span<const double> horizons, std::size_t n_paths,
                                          std::uint64_t seed);
std::vector<ExponentCurve> exponent_curve(const spectral::SpectralMeasure& measure, EventKind kind,
                                          std::span<const double> levels,
                                          std::span<const double> horizons, double delta,
                                          std::size_t n_paths, std::uint64_t seed);

/// Estimates on each delta grid from paths simulated once on the finest
/// one and subsampled, so coarser grids see a subset of the constraints.
/// Every delta and the horizon must be integer multiples of the finest
/// delta; otherwise ArgumentError.
std::vector<ExponentEstimate> sampled_exponent(const spectral::SpectralMeasure& measure,
                                               EventKind kind, double level, double horizon,
                                               std::span<const double> deltas,
                                               std::size_t n_paths, std::uint64_t seed);

/// Predicted order of the arm B probability relative to arm A.
enum class Direction { b_at_most_a, b_at_least_a };

struct PairedVerdict {
    ExponentEstimate a;
    ExponentEstimate b;
    Direction expected = Direction::b_at_most_a;
    double difference = 0.0; // p_b - p_a
    double tolerance = 0.0;  // 1.96 sqrt(se_a^2 + se_b^2)
    std::size_t only_a = 0;  // paths hitting in arm A only
    std::size_t only_b = 0;
    bool identical = false; // arms agree bit for bit
    bool holds = false;
};

/// Arm A simulates f_rho; arm B simulates f_rho + f_nu with the f_rho part
/// on the same normals. A zero nu makes the arms identical.
PairedVerdict paired_comparison(const spectral::SpectralMeasure& rho,
                                const spectral::SpectralMeasure& nu, EventKind kind, double level,
                                double horizon, double delta, std::size_t n_paths,
                                std::uint64_t seed, Direction expected);

struct SmoothingVerdict {
    ExponentEstimate left;  // mu + nu on [0, T + a]
    ExponentEstimate right; // mu + h^2 nu on [0, T]
    double tolerance = 0.0;
    bool holds = false;
};

/// P(mu + nu persists on [0, T + a]) <= P(mu + h^2 nu persists on [0, T]),
/// both arms driven by the same normals. Requires a > 0.
SmoothingVerdict smoothing_check(const spectral::SpectralMeasure& mu,
                                 const spectral::SpectralMeasure& nu, const spectral::Multiplier& h,
                                 double a, double level, double horizon, double delta,
                                 std::size_t n_paths, std::uint64_t seed);

/// Same with the default h = fejer(a).
SmoothingVerdict smoothing_check(const spectral::SpectralMeasure& mu,
                                 const spectral::SpectralMeasure& nu, double a, double level,
                                 double horizon, double delta, std::size_t n_paths,
                                 std::uint64_t seed);

} // namespace pershlab::estimator
