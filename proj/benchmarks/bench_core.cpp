// Copyright 2026 The gsc Authors
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
#include <vector>

#include "gsc/circuit_io.hpp"
#include "gsc/clifford.hpp"
#include "gsc/dense_engine.hpp"
#include "gsc/gf2.hpp"
#include "gsc/pipeline.hpp"
#include "gsc/random_circuits.hpp"

namespace {

using namespace gsc;

BitMatrix random_matrix(size_t n, Rng &rng) {
    std::vector<BitVector> rows;
    for (size_t r = 0; r < n; r++) {
        BitVector v(n);
        for (size_t c = 0; c < n; c++) {
            v.set(c, rng() & 1);
        }
        rows.push_back(v);
    }
    return BitMatrix::from_row_vectors(rows);
}

CliffordRep random_rep(size_t n, Rng &rng) {
    return *extract_rep(circuit_unitary(random_clifford_circuit(n, 40, rng)));
}

void BM_BitMatrixMultiply(benchmark::State &state) {
    Rng rng(1);
    size_t n = static_cast<size_t>(state.range(0));
    BitMatrix a = random_matrix(n, rng), b = random_matrix(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_BitMatrixMultiply)->Arg(14)->Arg(64)->Arg(128);

void BM_BitMatrixRank(benchmark::State &state) {
    Rng rng(2);
    size_t n = static_cast<size_t>(state.range(0));
    BitMatrix a = random_matrix(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank(a));
    }
}
BENCHMARK(BM_BitMatrixRank)->Arg(14)->Arg(64)->Arg(128);

void BM_Compose(benchmark::State &state) {
    Rng rng(3);
    size_t n = static_cast<size_t>(state.range(0));
    CliffordRep a = random_rep(n, rng), b = random_rep(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose(a, b));
    }
}
BENCHMARK(BM_Compose)->Arg(3)->Arg(7);

void BM_Inverse(benchmark::State &state) {
    Rng rng(4);
    CliffordRep a = random_rep(static_cast<size_t>(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(inverse(a));
    }
}
BENCHMARK(BM_Inverse)->Arg(7);

void BM_ExtractRep(benchmark::State &state) {
    Rng rng(5);
    DenseMatrix u = circuit_unitary(random_clifford_circuit(static_cast<size_t>(state.range(0)), 40, rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(extract_rep(u));
    }
}
BENCHMARK(BM_ExtractRep)->Arg(3)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_TMapSevenQubits(benchmark::State &state) {
    auto [u, v] = gottesman_mochon();
    auto [family, conjugator] = normalize_family(generators_from_gate(u * v));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_t_map(family, conjugator));
    }
}
BENCHMARK(BM_TMapSevenQubits)->Unit(benchmark::kMillisecond);

void BM_PipelineSevenQubits(benchmark::State &state) {
    auto [u, v] = gottesman_mochon();
    DenseMatrix uv = u * v;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_pipeline(uv));
    }
}
BENCHMARK(BM_PipelineSevenQubits)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
