// Copyright 2026 The skewcomm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "skewcomm/resolvent.hpp"

namespace {

using namespace skewcomm;

void BM_StoneTrapezoid(benchmark::State &state) {
    const ComplexMatrix a = diagonal({1.0, 2.0, 3.0});
    const StoneQuadratureSpec spec{{1.5, 2.5}, 1e-3, static_cast<int>(state.range(0)),
                                   QuadratureRule::Trapezoid};
    for (auto _ : state) {
        benchmark::DoNotOptimize(stone_projection(a, spec));
    }
}
BENCHMARK(BM_StoneTrapezoid)->Arg(500)->Arg(2000)->Arg(8000);

void BM_StoneGaussLegendre(benchmark::State &state) {
    const ComplexMatrix a = diagonal({1.0, 2.0, 3.0});
    const StoneQuadratureSpec spec{{1.5, 2.5}, 1e-3, static_cast<int>(state.range(0)),
                                   QuadratureRule::GaussLegendre};
    for (auto _ : state) {
        benchmark::DoNotOptimize(stone_projection(a, spec));
    }
}
BENCHMARK(BM_StoneGaussLegendre)->Arg(512)->Arg(2048);

}  // namespace

BENCHMARK_MAIN();
