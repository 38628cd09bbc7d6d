// Copyright 2026 The mubforge Authors
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

#include <random>

#include "mubforge/bit_matrix.h"
#include "mubforge/fibpoly.h"
#include "mubforge/factor_db.h"
#include "mubforge/mubgen.h"
#include "mubforge/qpke.h"
#include "mubforge/stabsearch.h"

using namespace mubforge;

namespace {

BitMatrix random_matrix(size_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            m.set(i, j, rng() & 1);
        }
    }
    return m;
}

void BM_mat_mul(benchmark::State &state) {
    size_t n = state.range(0);
    auto a = random_matrix(n, 1);
    auto b = random_matrix(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mat_mul(a, b));
    }
}
BENCHMARK(BM_mat_mul)->Arg(64)->Arg(256)->Arg(1024);

void BM_fibonacci_index(benchmark::State &state) {
    auto db = FactorDb::load_default();
    unsigned m = static_cast<unsigned>(state.range(0));
    auto f = char_poly(search_triangle(m, db.factors(m, +1)).B);
    auto minus = db.factors(m, -1);
    auto plus = db.factors(m, +1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fibonacci_index(f, minus, plus));
    }
}
BENCHMARK(BM_fibonacci_index)->Arg(16)->Arg(32);

void BM_generate_classes(benchmark::State &state) {
    auto db = FactorDb::load_default();
    size_t m = state.range(0);
    auto b = search_triangle(m, db.factors(static_cast<unsigned>(m), +1)).B;
    auto c = fib_stabilizer(b);
    auto g0 = standard_g0(m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_classes(c, g0));
    }
}
BENCHMARK(BM_generate_classes)->Arg(4)->Arg(6)->Arg(8);

void BM_psuc_wbit_mean(benchmark::State &state) {
    unsigned T = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(psuc_wbit_mean(10, T));
    }
}
BENCHMARK(BM_psuc_wbit_mean)->Arg(5)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
