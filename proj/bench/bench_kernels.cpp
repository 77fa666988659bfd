// Copyright 2026 The interfere Authors
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

#include "interfere/matrix.hpp"
#include "interfere/permdet.hpp"
#include "interfere/types.hpp"

namespace {

void BM_PermanentSerial(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const interfere::ComplexMatrix a = interfere::haar_random_unitary(n, 7).matrix();
    for (auto _ : state) benchmark::DoNotOptimize(interfere::permanent_serial(a, 24));
}

void BM_PermanentParallel(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const interfere::ComplexMatrix a = interfere::haar_random_unitary(n, 7).matrix();
    for (auto _ : state) benchmark::DoNotOptimize(interfere::permanent(a, 24));
}

// Bunched pattern: n particles in n/2 modes, both sides.
void BM_PermanentRepeated(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const interfere::ComplexMatrix a = interfere::haar_random_unitary(n / 2, 7).matrix();
    const interfere::Occupation occ(std::vector<int>(n / 2, 2));
    for (auto _ : state) benchmark::DoNotOptimize(interfere::permanent_repeated(a, occ, occ, 24));
}

}  // namespace

BENCHMARK(BM_PermanentSerial)->DenseRange(12, 20, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PermanentParallel)->DenseRange(12, 20, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PermanentRepeated)->DenseRange(12, 20, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
