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
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pershlab/sampler/covariance_grid.hpp"
#include "pershlab/spectral/measure.hpp"

namespace pershlab::sampler {

/// Source of sample paths on the grid {0, delta, ..., (n_points - 1) delta}.
/// Path i depends only on (seed, i) and the generator, never on which other
/// paths are requested, so batches can be generated in any order and
/// extended later.
class PathGenerator {
public:
    virtual ~PathGenerator() = default;

    virtual std::size_t n_points() const = 0;
    virtual double delta() const = 0;
    virtual std::string tag() const = 0;

    /// Writes paths [first, first + count) row-major into out
    /// (count * n_points values).
    virtual void generate(std::uint64_t seed, std::uint64_t first, std::size_t count,
                          std::span<double> out) const = 0;
};

using GeneratorPtr = std::shared_ptr<const PathGenerator>;

/// Paths from a factorized covariance grid.
class FactorizedGenerator final : public PathGenerator {
public:
    explicit FactorizedGenerator(std::shared_ptr<const CovarianceGrid> grid, std::uint32_t stream = 0);

    std::size_t n_points() const override { return grid_->n_points(); }
    double delta() const override { return grid_->delta(); }
    std::string tag() const override { return "factorized"; }
    void generate(std::uint64_t seed, std::uint64_t first, std::size_t count,
                  std::span<double> out) const override;

    const CovarianceGrid& grid() const { return *grid_; }

private:
    std::shared_ptr<const CovarianceGrid> grid_;
    std::uint32_t stream_;
};

/// Exact paths for a finite set of atoms:
/// sqrt(m_0) zeta_0 + sum_j sqrt(m_j) (zeta_j cos(l_j t) + eta_j sin(l_j t)).
class AtomGenerator final : public PathGenerator {
public:
    AtomGenerator(std::vector<spectral::Atom> atoms, double scale, double delta,
                  std::size_t n_points, std::uint32_t stream = 0);

    std::size_t n_points() const override { return n_points_; }
    double delta() const override { return delta_; }
    std::string tag() const override { return "atoms"; }
    void generate(std::uint64_t seed, std::uint64_t first, std::size_t count,
                  std::span<double> out) const override;

private:
    std::vector<spectral::Atom> atoms_;
    double delta_;
    std::size_t n_points_;
    std::uint32_t stream_;
    std::vector<double> basis_; // row-major n_points x (number of normals)
    std::size_t n_normals_ = 0;
};

/// X_j = sum_k U_k Z_{j + k} with i.i.d. standard normals Z (delta = 1).
class MovingAverageGenerator final : public PathGenerator {
public:
    MovingAverageGenerator(std::vector<double> weights, std::size_t n_points, std::uint32_t stream = 0);

    std::size_t n_points() const override { return n_points_; }
    double delta() const override { return 1.0; }
    std::string tag() const override;
    void generate(std::uint64_t seed, std::uint64_t first, std::size_t count,
                  std::span<double> out) const override;

private:
    std::vector<double> weights_;
    std::size_t n_points_;
    std::uint32_t stream_;
};

/// Pointwise sum of independent generators on one grid (children must use
/// distinct streams).
class SumGenerator final : public PathGenerator {
public:
    explicit SumGenerator(std::vector<GeneratorPtr> parts);

    std::size_t n_points() const override { return parts_.front()->n_points(); }
    double delta() const override { return parts_.front()->delta(); }
    std::string tag() const override;
    void generate(std::uint64_t seed, std::uint64_t first, std::size_t count,
                  std::span<double> out) const override;

private:
    std::vector<GeneratorPtr> parts_;
};

struct GeneratorOptions {
    // Streams used: `stream` for the density part, `stream + 1` for atoms.
    std::uint32_t stream = 0;
    GridOptions grid{};
};

/// Default exact sampler: the density part by covariance factorization and
/// the atoms by their exact trigonometric representation, independently.
/// Throws ArgumentError for a zero measure.
GeneratorPtr make_generator(const spectral::SpectralMeasure& measure, double delta,
                            std::size_t n_points, const GeneratorOptions& options = {});

/// Generates paths [0, n_paths) in chunks of `chunk` paths and calls
/// visit(first, count, values) for each, possibly from several threads at
/// once. Chunk boundaries do not depend on the worker count.
void stream_paths(const PathGenerator& generator, std::uint64_t seed, std::uint64_t n_paths,
                  const std::function<void(std::uint64_t, std::size_t, std::span<const double>)>& visit,
                  std::size_t chunk = 2048);

} // namespace pershlab::sampler
