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
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pershlab/sampler/covariance_grid.hpp"
#include "pershlab/sampler/generators.hpp"
#include "pershlab/spectral/measure.hpp"

namespace pershlab::sampler {

/// Materialized paths, row-major n_paths x n_points.
struct PathBatch {
    double delta = 0.0;
    std::size_t n_points = 0;
    std::size_t n_paths = 0;
    std::uint64_t seed = 0;
    std::string generator_tag;
    std::vector<double> values;
    std::map<std::string, double> metadata;

    std::span<const double> path(std::size_t i) const
    {
        return {values.data() + i * n_points, n_points};
    }
    double at(std::size_t path_index, std::size_t point) const
    {
        return values[path_index * n_points + point];
    }
};

PathBatch sample_batch(const PathGenerator& generator, std::uint64_t seed, std::size_t n_paths);

PathBatch sample_factorized(std::shared_ptr<const CovarianceGrid> grid, std::uint64_t seed,
                            std::size_t n_paths);

/// Series sampler on [0, horizon]. Records "remainder_bound",
/// "remainder_variance" and "n_intervals" in the metadata.
PathBatch sample_series(const spectral::SpectralMeasure& measure, double horizon, double delta,
                        std::uint64_t seed, std::size_t n_paths, double target_remainder_variance);

PathBatch sample_moving_average(std::vector<double> weights, std::size_t n_points,
                                std::uint64_t seed, std::size_t n_paths);

/// Binary dump: 32-byte little-endian header (magic "PSHL", u32 version = 1,
/// u32 n_paths, u32 n_points, f64 delta, u64 seed) followed by the values
/// column-major (all paths at point 0, then point 1, ...), f64 little-endian.
void write_path_dump(const std::filesystem::path& file, const PathBatch& batch);
PathBatch read_path_dump(const std::filesystem::path& file);

} // namespace pershlab::sampler
