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

#include "pershlab/sampler/path_batch.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

#include "pershlab/error.hpp"
#include "pershlab/sampler/series.hpp"

namespace pershlab::sampler {

namespace {

constexpr std::array<char, 4> kMagic{'P', 'S', 'H', 'L'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::ostream& out, T value)
{
    static_assert(std::is_trivially_copyable_v<T>);
    std::array<unsigned char, sizeof(T)> bytes;
    std::memcpy(bytes.data(), &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(bytes.begin(), bytes.end());
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), sizeof(T));
}

template <class T>
T get(std::istream& in)
{
    std::array<unsigned char, sizeof(T)> bytes;
    if (!in.read(reinterpret_cast<char*>(bytes.data()), sizeof(T))) {
        throw ArgumentError("path dump: truncated file");
    }
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(bytes.begin(), bytes.end());
    }
    T value;
    std::memcpy(&value, bytes.data(), sizeof(T));
    return value;
}

} // namespace

PathBatch sample_batch(const PathGenerator& generator, std::uint64_t seed, std::size_t n_paths)
{
    PathBatch b;
    b.delta = generator.delta();
    b.n_points = generator.n_points();
    b.n_paths = n_paths;
    b.seed = seed;
    b.generator_tag = generator.tag();
    b.values.resize(n_paths * b.n_points);
    stream_paths(generator, seed, n_paths,
                 [&b](std::uint64_t first, std::size_t count, std::span<const double> v) {
                     std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(count * b.n_points),
                               b.values.begin() + static_cast<std::ptrdiff_t>(first * b.n_points));
                 });
    return b;
}

PathBatch sample_factorized(std::shared_ptr<const CovarianceGrid> grid, std::uint64_t seed,
                            std::size_t n_paths)
{
    const FactorizedGenerator gen(std::move(grid));
    PathBatch b = sample_batch(gen, seed, n_paths);
    b.metadata["jitter"] = gen.grid().jitter();
    b.metadata["clamped_mass"] = gen.grid().clamped_mass();
    return b;
}

PathBatch sample_series(const spectral::SpectralMeasure& measure, double horizon, double delta,
                        std::uint64_t seed, std::size_t n_paths, double target_remainder_variance)
{
    if (!(horizon >= 0.0) || !(delta > 0.0)) {
        throw ArgumentError("sample_series: need horizon >= 0 and delta > 0");
    }
    const auto n_points = static_cast<std::size_t>(std::llround(horizon / delta)) + 1;
    SeriesOptions o;
    o.target_remainder_variance = target_remainder_variance;
    const auto gen = make_series_generator(measure, delta, n_points, o);
    PathBatch b = sample_batch(*gen, seed, n_paths);
    b.metadata["remainder_bound"] = gen->decomposition().remainder_bound();
    b.metadata["remainder_variance"] = gen->decomposition().remainder_variance();
    b.metadata["n_intervals"] = static_cast<double>(gen->decomposition().n_intervals());
    return b;
}

PathBatch sample_moving_average(std::vector<double> weights, std::size_t n_points,
                                std::uint64_t seed, std::size_t n_paths)
{
    const MovingAverageGenerator gen(std::move(weights), n_points);
    return sample_batch(gen, seed, n_paths);
}

void write_path_dump(const std::filesystem::path& file, const PathBatch& batch)
{
    if (batch.n_paths > 0xFFFFFFFFull || batch.n_points > 0xFFFFFFFFull) {
        throw ArgumentError("path dump: batch too large for the header");
    }
    std::ofstream out(file, std::ios::binary);
    if (!out) {
        throw ArgumentError("path dump: cannot open " + file.string());
    }
    out.write(kMagic.data(), kMagic.size());
    put<std::uint32_t>(out, kVersion);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(batch.n_paths));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(batch.n_points));
    put<double>(out, batch.delta);
    put<std::uint64_t>(out, batch.seed);
    for (std::size_t k = 0; k < batch.n_points; ++k) {
        for (std::size_t p = 0; p < batch.n_paths; ++p) {
            put<double>(out, batch.at(p, k));
        }
    }
    if (!out) {
        throw ArgumentError("path dump: write failed for " + file.string());
    }
}

PathBatch read_path_dump(const std::filesystem::path& file)
{
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw ArgumentError("path dump: cannot open " + file.string());
    }
    std::array<char, 4> magic{};
    if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
        throw ArgumentError("path dump: bad magic");
    }
    if (get<std::uint32_t>(in) != kVersion) {
        throw ArgumentError("path dump: unsupported version");
    }
    PathBatch b;
    b.n_paths = get<std::uint32_t>(in);
    b.n_points = get<std::uint32_t>(in);
    b.delta = get<double>(in);
    b.seed = get<std::uint64_t>(in);
    b.generator_tag = "dump";
    b.values.resize(b.n_paths * b.n_points);
    for (std::size_t k = 0; k < b.n_points; ++k) {
        for (std::size_t p = 0; p < b.n_paths; ++p) {
            b.values[p * b.n_points + k] = get<double>(in);
        }
    }
    return b;
}

} // namespace pershlab::sampler
