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

#include <vector>

#include <benchmark/benchmark.h>

#include "pershlab/estimator/windows.hpp"
#include "pershlab/sampler/generators.hpp"
#include "pershlab/spectral/builtins.hpp"
#include "pershlab/spectral/operations.hpp"

namespace {

using namespace pershlab;
namespace bi = pershlab::spectral::builtins;

void BM_Covariance(benchmark::State& state)
{
    const auto m = bi::by_name(state.range(0) == 0 ? "bessel_j0" : "counterexample_log");
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectral::covariance(m, t));
        t += 0.37;
    }
}
BENCHMARK(BM_Covariance)->Arg(0)->Arg(1);

void BM_FoldNonconv(benchmark::State& state)
{
    const auto m = bi::nonconv_tail();
    for (auto _ : state) {
        auto f = spectral::fold(m, 0.5);
        benchmark::DoNotOptimize(f.total_mass());
    }
}
BENCHMARK(BM_FoldNonconv);

void BM_CollectStatistics(benchmark::State& state)
{
    const auto gen = sampler::make_generator(bi::sinc_box(), 1.0 / 16, 129);
    const std::vector<estimator::WindowQuery> q = {{0, 129, 1, EventKind::persistence},
                                                   {0, 129, 1, EventKind::ball}};
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto s = estimator::collect_statistics(*gen, 9, n, q);
        benchmark::DoNotOptimize(s.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CollectStatistics)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
