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

#include "skewcomm/assignment.hpp"
#include "skewcomm/commutation.hpp"
#include "skewcomm/linalg.hpp"
#include "skewcomm/random.hpp"

namespace {

using namespace skewcomm;

void BM_Eigenvalues(benchmark::State &state) {
    Rng rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix m = ginibre(n, n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigenvalues(m));
    }
}
BENCHMARK(BM_Eigenvalues)->RangeMultiplier(2)->Range(4, 64);

void BM_Polar(benchmark::State &state) {
    Rng rng(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix m = ginibre(n, n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(polar(m));
    }
}
BENCHMARK(BM_Polar)->RangeMultiplier(2)->Range(4, 64);

void BM_Assignment(benchmark::State &state) {
    Rng rng(3);
    CostMatrix c;
    c.n = static_cast<std::size_t>(state.range(0));
    c.cost.resize(c.n * c.n);
    for (double &x : c.cost) x = rng.uniform(0.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_assignment(c));
    }
}
BENCHMARK(BM_Assignment)->RangeMultiplier(2)->Range(4, 128);

void BM_SwapCheck(benchmark::State &state) {
    Rng rng(4);
    const auto n = static_cast<std::size_t>(state.range(0));
    const OperatorPair p{ginibre(n, n, rng), ginibre(n, n, rng), std::nullopt, ""};
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectrum_swap_check(p, 1e-7));
    }
}
BENCHMARK(BM_SwapCheck)->RangeMultiplier(2)->Range(4, 32);

}  // namespace
