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

#include "pershlab/estimator/windows.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pershlab/error.hpp"
#include "pershlab/parallel.hpp"

namespace pershlab::estimator {

namespace {

constexpr std::size_t kChunk = 2048;

void check_queries(std::span<const WindowQuery> queries, std::size_t n_points)
{
    for (const auto& q : queries) {
        if (q.stride == 0 || q.begin >= q.end || q.end > n_points) {
            throw ArgumentError("window query outside the path grid");
        }
    }
}

// Sums of x_i x_{i+k} / (n - k) for one path, added into acc[k] and acc2[k].
void add_lag_products(std::span<const double> path, std::size_t max_lag, double* acc, double* acc2)
{
    const std::size_t n = path.size();
    for (std::size_t k = 0; k <= max_lag; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i + k < n; ++i) {
            s += path[i] * path[i + k];
        }
        s /= static_cast<double>(n - k);
        acc[k] += s;
        acc2[k] += s * s;
    }
}

std::vector<LagCovariance> finish_lags(const std::vector<double>& sum, const std::vector<double>& sum2,
                                       std::size_t n_paths)
{
    const double n = static_cast<double>(n_paths);
    std::vector<LagCovariance> out(sum.size());
    for (std::size_t k = 0; k < sum.size(); ++k) {
        const double mean = sum[k] / n;
        const double var = n > 1 ? std::max(0.0, (sum2[k] - n * mean * mean) / (n - 1.0)) : 0.0;
        out[k] = {k, mean, std::sqrt(var / n)};
    }
    return out;
}

} // namespace

double window_statistic(std::span<const double> path, const WindowQuery& q)
{
    if (q.kind == EventKind::persistence) {
        double m = std::numeric_limits<double>::infinity();
        for (std::size_t i = q.begin; i < q.end; i += q.stride) {
            m = std::min(m, path[i]);
        }
        return m;
    }
    double m = 0.0;
    for (std::size_t i = q.begin; i < q.end; i += q.stride) {
        m = std::max(m, std::abs(path[i]));
    }
    return m;
}

std::vector<std::vector<double>> collect_statistics(const sampler::PathGenerator& generator,
                                                    std::uint64_t seed, std::size_t n_paths,
                                                    std::span<const WindowQuery> queries)
{
    const std::size_t n = generator.n_points();
    check_queries(queries, n);
    std::vector<std::vector<double>> stats(queries.size(), std::vector<double>(n_paths));
    sampler::stream_paths(
        generator, seed, n_paths,
        [&](std::uint64_t first, std::size_t count, std::span<const double> values) {
            for (std::size_t p = 0; p < count; ++p) {
                const auto path = values.subspan(p * n, n);
                for (std::size_t q = 0; q < queries.size(); ++q) {
                    stats[q][first + p] = window_statistic(path, queries[q]);
                }
            }
        },
        kChunk);
    return stats;
}

std::vector<std::vector<double>> collect_statistics(const sampler::PathBatch& batch,
                                                    std::span<const WindowQuery> queries)
{
    check_queries(queries, batch.n_points);
    std::vector<std::vector<double>> stats(queries.size(), std::vector<double>(batch.n_paths));
    for (std::size_t p = 0; p < batch.n_paths; ++p) {
        for (std::size_t q = 0; q < queries.size(); ++q) {
            stats[q][p] = window_statistic(batch.path(p), queries[q]);
        }
    }
    return stats;
}

LevelSweep::LevelSweep(EventKind kind, std::vector<double> statistics)
    : kind_(kind), sorted_(std::move(statistics))
{
    if (sorted_.empty()) {
        throw ArgumentError("level sweep needs at least one path");
    }
    std::sort(sorted_.begin(), sorted_.end());
}

std::size_t LevelSweep::hits(double level) const
{
    if (kind_ == EventKind::persistence) {
        const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), level);
        return static_cast<std::size_t>(sorted_.end() - it);
    }
    const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), level);
    return static_cast<std::size_t>(it - sorted_.begin());
}

double LevelSweep::p_hat(double level) const
{
    return static_cast<double>(hits(level)) / static_cast<double>(sorted_.size());
}

std::vector<LagCovariance> lag_covariances(const sampler::PathBatch& batch, std::size_t max_lag)
{
    if (batch.n_paths == 0 || max_lag >= batch.n_points) {
        throw ArgumentError("lag_covariances: need paths and max_lag < n_points");
    }
    std::vector<double> sum(max_lag + 1, 0.0);
    std::vector<double> sum2(max_lag + 1, 0.0);
    for (std::size_t p = 0; p < batch.n_paths; ++p) {
        add_lag_products(batch.path(p), max_lag, sum.data(), sum2.data());
    }
    return finish_lags(sum, sum2, batch.n_paths);
}

std::vector<LagCovariance> lag_covariances(const sampler::PathGenerator& generator,
                                           std::uint64_t seed, std::size_t n_paths,
                                           std::size_t max_lag)
{
    const std::size_t n = generator.n_points();
    if (n_paths == 0 || max_lag >= n) {
        throw ArgumentError("lag_covariances: need paths and max_lag < n_points");
    }
    // Per-chunk partial sums in fixed slots, reduced in chunk order.
    const std::size_t n_chunks = (n_paths + kChunk - 1) / kChunk;
    const std::size_t width = 2 * (max_lag + 1);
    std::vector<double> partial(n_chunks * width, 0.0);
    sampler::stream_paths(
        generator, seed, n_paths,
        [&](std::uint64_t first, std::size_t count, std::span<const double> values) {
            double* slot = partial.data() + (first / kChunk) * width;
            for (std::size_t p = 0; p < count; ++p) {
                add_lag_products(values.subspan(p * n, n), max_lag, slot, slot + max_lag + 1);
            }
        },
        kChunk);
    std::vector<double> sum(max_lag + 1, 0.0);
    std::vector<double> sum2(max_lag + 1, 0.0);
    for (std::size_t c = 0; c < n_chunks; ++c) {
        for (std::size_t k = 0; k <= max_lag; ++k) {
            sum[k] += partial[c * width + k];
            sum2[k] += partial[c * width + max_lag + 1 + k];
        }
    }
    return finish_lags(sum, sum2, n_paths);
}

} // namespace pershlab::estimator
