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

namespace pershlab::estimator {

/// Grid points begin, begin + stride, ... below end. The per-path statistic
/// is the window minimum (persistence) or the maximum of |x| (ball).
struct WindowQuery {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t stride = 1;
    EventKind kind = EventKind::persistence;
};

double window_statistic(std::span<const double> path, const WindowQuery& query);

/// One vector of per-path statistics per query, indexed by path.
std::vector<std::vector<double>> collect_statistics(const sampler::PathGenerator& generator,
                                                    std::uint64_t seed, std::size_t n_paths,
                                                    std::span<const WindowQuery> queries);
std::vector<std::vector<double>> collect_statistics(const sampler::PathBatch& batch,
                                                    std::span<const WindowQuery> queries);

/// Sorted statistics of one window; hit counts for any level follow by
/// binary search, so p_hat is exactly monotone in the level.
class LevelSweep {
public:
    LevelSweep(EventKind kind, std::vector<double> statistics);

    EventKind kind() const { return kind_; }
    std::size_t n_paths() const { return sorted_.size(); }
    const std::vector<double>& sorted() const { return sorted_; }

    /// Persistence: #{min > level}. Ball: #{max |x| < level}.
    std::size_t hits(double level) const;
    double p_hat(double level) const;

private:
    EventKind kind_;
    std::vector<double> sorted_;
};

struct LagCovariance {
    std::size_t lag = 0;
    double value = 0.0;
    double standard_error = 0.0;
};

/// Empirical E[x_i x_{i+k}] for k = 0..max_lag (the mean is known to be 0).
/// Each path contributes its average over i, so the standard error accounts
/// for correlation along the path.
std::vector<LagCovariance> lag_covariances(const sampler::PathBatch& batch, std::size_t max_lag);
std::vector<LagCovariance> lag_covariances(const sampler::PathGenerator& generator,
                                           std::uint64_t seed, std::size_t n_paths,
                                           std::size_t max_lag);

} // namespace pershlab::estimator
