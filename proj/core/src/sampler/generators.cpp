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

#include "pershlab/sampler/generators.hpp"

#include <algorithm>
#include <cmath>

#include "pershlab/error.hpp"
#include "pershlab/parallel.hpp"
#include "pershlab/sampler/philox.hpp"

namespace pershlab::sampler {

FactorizedGenerator::FactorizedGenerator(std::shared_ptr<const CovarianceGrid> grid, std::uint32_t stream)
    : grid_(std::move(grid)), stream_(stream)
{
    if (!grid_) {
        throw ArgumentError("factorized generator: missing grid");
    }
}

void FactorizedGenerator::generate(std::uint64_t seed, std::uint64_t first, std::size_t count,
                                   std::span<double> out) const
{
    grid_->sample(seed, stream_, first, count, out);
}

AtomGenerator::AtomGenerator(std::vector<spectral::Atom> atoms, double scale, double delta,
                             std::size_t n_points, std::uint32_t stream)
    : atoms_(std::move(atoms)), delta_(delta), n_points_(n_points), stream_(stream)
{
    if (!(delta > 0.0) || n_points < 1) {
        throw ArgumentError("atom generator: need delta > 0 and at least one point");
    }
    std::vector<std::vector<double>> columns;
    for (const auto& a : atoms_) {
        const double amp = std::sqrt(scale * a.mass);
        std::vector<double> c(n_points);
        for (std::size_t k = 0; k < n_points; ++k) {
            c[k] = amp * std::cos(a.lambda * static_cast<double>(k) * delta);
        }
        columns.push_back(std::move(c));
        if (a.lambda > 0.0) {
            std::vector<double> s(n_points);
            for (std::size_t k = 0; k < n_points; ++k) {
                s[k] = amp * std::sin(a.lambda * static_cast<double>(k) * delta);
            }
            columns.push_back(std::move(s));
        }
    }
    n_normals_ = columns.size();
    basis_.resize(n_points * n_normals_);
    for (std::size_t k = 0; k < n_points; ++k) {
        for (std::size_t j = 0; j < n_normals_; ++j) {
            basis_[k * n_normals_ + j] = columns[j][k];
        }
    }
}

void AtomGenerator::generate(std::uint64_t seed, std::uint64_t first, std::size_t count,
                             std::span<double> out) const
{
    std::vector<double> z(n_normals_);
    for (std::size_t p = 0; p < count; ++p) {
        NormalStream(seed, first + p, stream_).fill(z);
        double* row = out.data() + p * n_points_;
        for (std::size_t k = 0; k < n_points_; ++k) {
            const double* b = basis_.data() + k * n_normals_;
            double v = 0.0;
            for (std::size_t j = 0; j < n_normals_; ++j) {
                v += b[j] * z[j];
            }
            row[k] = v;
        }
    }
}

MovingAverageGenerator::MovingAverageGenerator(std::vector<double> weights, std::size_t n_points,
                                               std::uint32_t stream)
    : weights_(std::move(weights)), n_points_(n_points), stream_(stream)
{
    if (weights_.empty()) {
        throw ArgumentError("moving average: weights must not be empty");
    }
    if (n_points_ < 1) {
        throw ArgumentError("moving average: need at least one point");
    }
}

std::string MovingAverageGenerator::tag() const
{
    return "moving_average(" + std::to_string(weights_.size()) + ")";
}

void MovingAverageGenerator::generate(std::uint64_t seed, std::uint64_t first, std::size_t count,
                                      std::span<double> out) const
{
    const std::size_t k = weights_.size();
    std::vector<double> z(n_points_ + k - 1);
    for (std::size_t p = 0; p < count; ++p) {
        NormalStream(seed, first + p, stream_).fill(z);
        double* row = out.data() + p * n_points_;
        for (std::size_t j = 0; j < n_points_; ++j) {
            double v = 0.0;
            for (std::size_t i = 0; i < k; ++i) {
                v += weights_[i] * z[j + i];
            }
            row[j] = v;
        }
    }
}

SumGenerator::SumGenerator(std::vector<GeneratorPtr> parts) : parts_(std::move(parts))
{
    if (parts_.empty()) {
        throw ArgumentError("sum generator: no parts");
    }
    for (const auto& p : parts_) {
        if (!p || p->n_points() != parts_.front()->n_points() || p->delta() != parts_.front()->delta()) {
            throw ArgumentError("sum generator: parts must share one grid");
        }
    }
}

std::string SumGenerator::tag() const
{
    std::string t = "sum(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        t += (i ? "," : "") + parts_[i]->tag();
    }
    return t + ")";
}

void SumGenerator::generate(std::uint64_t seed, std::uint64_t first, std::size_t count,
                            std::span<double> out) const
{
    const std::size_t n = count * n_points();
    parts_.front()->generate(seed, first, count, out);
    std::vector<double> buffer(n);
    for (std::size_t i = 1; i < parts_.size(); ++i) {
        parts_[i]->generate(seed, first, count, buffer);
        for (std::size_t j = 0; j < n; ++j) {
            out[j] += buffer[j];
        }
    }
}

GeneratorPtr make_generator(const spectral::SpectralMeasure& measure, double delta,
                            std::size_t n_points, const GeneratorOptions& options)
{
    if (measure.is_zero()) {
        throw ArgumentError("make_generator: zero measure");
    }
    std::vector<GeneratorPtr> parts;
    if (measure.has_density()) {
        const spectral::SpectralMeasure ac(measure.pieces(), {}, measure.scale());
        auto grid = std::make_shared<const CovarianceGrid>(
            CovarianceGrid::build(ac, delta, n_points, options.grid));
        parts.push_back(std::make_shared<FactorizedGenerator>(std::move(grid), options.stream));
    }
    if (!measure.atoms().empty()) {
        parts.push_back(std::make_shared<AtomGenerator>(measure.atoms(), measure.scale(), delta,
                                                        n_points, options.stream + 1));
    }
    if (parts.size() == 1) {
        return parts.front();
    }
    return std::make_shared<SumGenerator>(std::move(parts));
}

void stream_paths(const PathGenerator& generator, std::uint64_t seed, std::uint64_t n_paths,
                  const std::function<void(std::uint64_t, std::size_t, std::span<const double>)>& visit,
                  std::size_t chunk)
{
    chunk = std::max<std::size_t>(chunk, 1);
    const std::size_t n = generator.n_points();
    parallel_for_chunks(n_paths, chunk, [&](std::size_t b, std::size_t e) {
        std::vector<double> values((e - b) * n);
        generator.generate(seed, b, e - b, values);
        visit(b, e - b, values);
    });
}

} // namespace pershlab::sampler
