/*
 * Copyright 2026 the negacode authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "negacode/census.hpp"
#include "negacode/dncode.hpp"
#include "negacode/negafactor.hpp"
#include "negacode/poly.hpp"

namespace {

using namespace negacode;

void BM_FactorGeneric(benchmark::State& state) {
    const Field f(13);
    const auto n = static_cast<uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(factor_xn_plus_one(f, n));
    }
}
BENCHMARK(BM_FactorGeneric)->Arg(16)->Arg(64)->Arg(256);

void BM_FactorClosed(benchmark::State& state) {
    const Field f(13);
    const auto n = static_cast<uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(factor_xn_plus_one_closed(f, n));
    }
}
BENCHMARK(BM_FactorClosed)->Arg(16)->Arg(64)->Arg(256);

void BM_MinDistance(benchmark::State& state) {
    const Field f(3);
    const auto n = static_cast<uint64_t>(state.range(0));
    const auto census = enumerate_self_dual_bruteforce(f, n);
    const DNCode code(f, census.front());
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_distance(code));
    }
}
BENCHMARK(BM_MinDistance)->Arg(4)->Arg(8);

void BM_WeightEnumerator(benchmark::State& state) {
    const Field f(3);
    const auto census = enumerate_self_dual_bruteforce(f, 8);
    const DNCode code(f, census.front());
    for (auto _ : state) {
        benchmark::DoNotOptimize(weight_enumerator(code));
    }
}
BENCHMARK(BM_WeightEnumerator);

void BM_CensusBrute(benchmark::State& state) {
    const Field f(3);
    const auto n = static_cast<uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_self_dual_bruteforce(f, n));
    }
}
BENCHMARK(BM_CensusBrute)->Arg(4)->Arg(8);

void BM_CensusCrt(benchmark::State& state) {
    const Field f(3);
    const auto n = static_cast<uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_self_dual_crt(f, n));
    }
}
BENCHMARK(BM_CensusCrt)->Arg(8)->Arg(16);

void BM_SelfDualCheck(benchmark::State& state) {
    const Field f(5);
    const auto census = enumerate_self_dual_crt(f, 8);
    const DNCode code(f, census.elements.front());
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_self_dual(code));
    }
}
BENCHMARK(BM_SelfDualCheck);

}  // namespace

BENCHMARK_MAIN();
