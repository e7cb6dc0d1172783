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

#include <memory>
#include <vector>

#include <benchmark/benchmark.h>

#include "pershlab/sampler/covariance_grid.hpp"
#include "pershlab/sampler/generators.hpp"
#include "pershlab/sampler/philox.hpp"
#include "pershlab/sampler/series.hpp"
#include "pershlab/spectral/builtins.hpp"

namespace {

using namespace pershlab;
namespace bi = pershlab::spectral::builtins;

void BM_PhiloxNormals(benchmark::State& state)
{
    std::vector<double> z(static_cast<std::size_t>(state.range(0)));
    std::uint64_t path = 0;
    for (auto _ : state) {
        sampler::NormalStream(1, path++, 0).fill(z);
        benchmark::DoNotOptimize(z.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PhiloxNormals)->Arg(64)->Arg(1024);

// Default order: circulant when the embedding is nonnegative, else Cholesky.
// The "circulant" counter records which one was used.
void BM_BuildGrid(benchmark::State& state)
{
    const auto m = bi::sinc_box();
    const auto n = static_cast<std::size_t>(state.range(0));
    bool circulant = false;
    for (auto _ : state) {
        auto g = sampler::CovarianceGrid::build(m, 1.0 / 16, n);
        circulant = g.kind() == sampler::FactorizationKind::circulant;
        benchmark::DoNotOptimize(g.min_embedding_eigenvalue());
    }
    state.counters["circulant"] = circulant;
}
BENCHMARK(BM_BuildGrid)->RangeMultiplier(4)->Range(64, 1024);

void BM_BuildGridBessel(benchmark::State& state)
{
    const auto m = bi::bessel_j0();
    const auto n = static_cast<std::size_t>(state.range(0));
    bool circulant = false;
    for (auto _ : state) {
        auto g = sampler::CovarianceGrid::build(m, 0.25, n);
        circulant = g.kind() == sampler::FactorizationKind::circulant;
        benchmark::DoNotOptimize(g.min_embedding_eigenvalue());
    }
    state.counters["circulant"] = circulant;
}
BENCHMARK(BM_BuildGridBessel)->RangeMultiplier(4)->Range(64, 1024);

void BM_BuildCholesky(benchmark::State& state)
{
    const auto m = bi::sinc_box();
    const auto n = static_cast<std::size_t>(state.range(0));
    sampler::GridOptions opt;
    opt.allow_circulant = false;
    for (auto _ : state) {
        auto g = sampler::CovarianceGrid::build(m, 1.0 / 16, n, opt);
        benchmark::DoNotOptimize(g.jitter());
    }
}
BENCHMARK(BM_BuildCholesky)->RangeMultiplier(4)->Range(64, 1024);

void sample_paths(benchmark::State& state, const sampler::PathGenerator& gen)
{
    const std::size_t count = 256;
    std::vector<double> out(count * gen.n_points());
    std::uint64_t first = 0;
    for (auto _ : state) {
        gen.generate(3, first, count, out);
        first += count;
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count));
}

void BM_SampleDefault(benchmark::State& state)
{
    const auto gen = sampler::make_generator(bi::sinc_box(), 1.0 / 16, static_cast<std::size_t>(state.range(0)));
    const auto* f = dynamic_cast<const sampler::FactorizedGenerator*>(gen.get());
    state.counters["circulant"] = f != nullptr && f->grid().kind() == sampler::FactorizationKind::circulant;
    sample_paths(state, *gen);
}
BENCHMARK(BM_SampleDefault)->Arg(65)->Arg(257)->Arg(1025);

// sinc_box at integer spacing is white noise, whose embedding is exact.
void BM_SampleCirculant(benchmark::State& state)
{
    const auto gen = sampler::make_generator(bi::sinc_box(), 1.0, static_cast<std::size_t>(state.range(0)));
    const auto* f = dynamic_cast<const sampler::FactorizedGenerator*>(gen.get());
    state.counters["circulant"] = f != nullptr && f->grid().kind() == sampler::FactorizationKind::circulant;
    sample_paths(state, *gen);
}
BENCHMARK(BM_SampleCirculant)->Arg(65)->Arg(257)->Arg(1025);

void BM_SampleCholesky(benchmark::State& state)
{
    sampler::GeneratorOptions opt;
    opt.grid.allow_circulant = false;
    const auto gen =
        sampler::make_generator(bi::sinc_box(), 1.0 / 16, static_cast<std::size_t>(state.range(0)), opt);
    sample_paths(state, *gen);
}
BENCHMARK(BM_SampleCholesky)->Arg(65)->Arg(257);

void BM_SampleSeries(benchmark::State& state)
{
    const auto gen = sampler::make_series_generator(bi::sinc_box(), 0.5, 21,
                                                    {.n_intervals = static_cast<std::size_t>(state.range(0))});
    sample_paths(state, *gen);
}
BENCHMARK(BM_SampleSeries)->Arg(100)->Arg(1000);

} // namespace
