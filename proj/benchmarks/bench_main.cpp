// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <benchmark/benchmark.h>

#include "thetacong/construct.hpp"
#include "thetacong/curve.hpp"
#include "thetacong/obstruct.hpp"
#include "thetacong/point_search.hpp"

using namespace thetacong;

namespace {

void BM_GroupLawOverK(benchmark::State& state) {
  const Field k = Field::quadratic(13);
  const Curve e3(3, Angle(2, 1), k);
  const CurvePoint p(QuadElem(make_rat(13, 4)), QuadElem(Rat(0), make_rat(7, 8), k));
  const CurvePoint q = twist_ascend(e3, CurvePoint(QuadElem(-9), QuadElem(-216)));
  for (auto _ : state) benchmark::DoNotOptimize(add(e3, p, q));
}
BENCHMARK(BM_GroupLawOverK);

void BM_ScalarMul(benchmark::State& state) {
  const Curve e39(39, Angle(2, 1), Field::rationals());
  const CurvePoint p(QuadElem(-9), QuadElem(-216));
  for (auto _ : state) benchmark::DoNotOptimize(scalar_mul(e39, state.range(0), p));
}
BENCHMARK(BM_ScalarMul)->Arg(4)->Arg(16);

void BM_PointSearch(benchmark::State& state) {
  const Curve e3(3, Angle(2, 1), Field::rationals());
  const SearchBudget budget{state.range(0), state.range(1), 1};
  for (auto _ : state) benchmark::DoNotOptimize(naive_point_search(e3, budget));
}
BENCHMARK(BM_PointSearch)->Args({10'000, 100})->Args({1'000'000, 1'000})->Unit(benchmark::kMillisecond);

void BM_Type3Search(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(search_type3(3, Angle(2, 1), 13, SearchBudget{}));
}
BENCHMARK(BM_Type3Search);

void BM_ObstructionReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(obstruction_report(390, Angle(128, 47)));
}
BENCHMARK(BM_ObstructionReport);

}  // namespace

BENCHMARK_MAIN();
