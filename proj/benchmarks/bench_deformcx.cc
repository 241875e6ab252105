// Copyright 2026 The deformcx Authors
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

#include "deformcx/binaryforms.h"
#include "deformcx/builtins.h"
#include "deformcx/incidence.h"

namespace deformcx {
namespace {

RatMatrix RandomLowRank(std::size_t n, std::size_t rank, long height, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-height, height);
  auto random = [&](std::size_t r, std::size_t c) {
    std::vector<RatVector> rows(r, RatVector(c));
    for (auto& row : rows) {
      for (auto& x : row) x = coeff(rng);
    }
    return RatMatrix::FromDense(rows, c);
  };
  return random(n, rank).Multiply(random(rank, n));
}

void BM_Rank(benchmark::State& state, RankMode mode) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RatMatrix m = RandomLowRank(n, n / 2, 1000, 42);
  for (auto _ : state) benchmark::DoNotOptimize(Rank(m, mode));
  state.SetComplexityN(state.range(0));
}
BENCHMARK_CAPTURE(BM_Rank, exact, RankMode::kExact)->RangeMultiplier(2)->Range(8, 64);
BENCHMARK_CAPTURE(BM_Rank, modular, RankMode::kModular)->RangeMultiplier(2)->Range(8, 64);

void BM_BuildComplex(benchmark::State& state, const char* name) {
  BuiltinAlgebra b = Builtin(name);
  auto p = QuadraticPresentation::Builtin(b.type, b.law.dim());
  for (auto _ : state) {
    FiberComplex c = FiberComplex::Build(b.law, p);
    benchmark::DoNotOptimize(Cohomology(c).h2);
  }
}
BENCHMARK_CAPTURE(BM_BuildComplex, sl2, "sl2");
BENCHMARK_CAPTURE(BM_BuildComplex, gl2, "gl2");
BENCHMARK_CAPTURE(BM_BuildComplex, kx3, "kx3");
BENCHMARK_CAPTURE(BM_BuildComplex, richardson1, "richardson(1)");

void BM_RichardsonRatios(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(JacobiatorRatioTest().quotient);
}
BENCHMARK(BM_RichardsonRatios);

void BM_RichardsonFull(benchmark::State& state, RankMode mode) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(RichardsonAnisotropy(RichardsonMode::kFull, 7, mode).h2);
  }
}
BENCHMARK_CAPTURE(BM_RichardsonFull, modular, RankMode::kModular)
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);
BENCHMARK_CAPTURE(BM_RichardsonFull, exact, RankMode::kExact)
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);

}  // namespace
}  // namespace deformcx

BENCHMARK_MAIN();
