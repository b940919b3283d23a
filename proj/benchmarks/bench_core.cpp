// Copyright (c) the icx authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "icx/checker.hpp"
#include "icx/conjugacy.hpp"
#include "icx/fm_subgradient.hpp"
#include "icx/instances.hpp"
#include "icx/lp.hpp"
#include "icx/polytope.hpp"

using namespace icx;

namespace {

ZFunction star_function() {
  for (const auto& e : corpus())
    if (e.name == "exla1") return std::get<ZFunction>(e.data);
  throw std::logic_error("corpus");
}

void BM_LpSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  IneqSystem sys(n);
  for (int j = 0; j < n; ++j) {
    RatVec up(n, Rat(0)), down(n, Rat(0));
    up[j] = 1;
    down[j] = -1;
    sys.add_row(up, Rat(5));
    sys.add_row(down, Rat(5));
  }
  for (int j = 0; j + 1 < n; ++j) {
    RatVec row(n, Rat(0));
    row[j] = 1;
    row[j + 1] = 1;
    sys.add_row(row, Rat(3));
  }
  RatVec obj(n, Rat(1));
  for (auto _ : state) benchmark::DoNotOptimize(lp_solve(obj, sys, LpSense::Max));
}
BENCHMARK(BM_LpSolve)->Arg(2)->Arg(4)->Arg(6);

void BM_HullMembership(benchmark::State& state) {
  const long w = state.range(0);
  std::vector<RatVec> pts;
  for (long a = 0; a <= w; ++a)
    for (long b = 0; b <= w; ++b) pts.push_back({Rat(a), Rat(b)});
  const RatVec x = {make_rat(2 * w - 1, 2), make_rat(1, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(hull_membership(x, pts));
}
BENCHMARK(BM_HullMembership)->Arg(5)->Arg(12)->Arg(21);

void BM_SetChecker(benchmark::State& state) {
  const ZSet s = star_function().domain();
  for (auto _ : state) benchmark::DoNotOptimize(is_integrally_convex_set(s));
}
BENCHMARK(BM_SetChecker);

void BM_FunctionChecker(benchmark::State& state) {
  const auto f = gen_lnat_random(3, ZPoint(3, Int(0)), ZPoint(3, Int(2)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(is_integrally_convex_function(f));
}
BENCHMARK(BM_FunctionChecker);

void BM_FmSubgradient(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = gen_lnat_random(n, ZPoint(n, Int(0)), ZPoint(n, Int(2)), 7);
  const ZPoint x(n, Int(1));
  for (auto _ : state) benchmark::DoNotOptimize(fm_integer_subgradient(f, x));
}
BENCHMARK(BM_FmSubgradient)->Arg(2)->Arg(3)->Arg(4);

void BM_ConjugateTable(benchmark::State& state) {
  const auto f = star_function();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        conjugate_table(f, ZPoint(3, Int(-2)), ZPoint(3, Int(2))));
}
BENCHMARK(BM_ConjugateTable);

void BM_Biconjugate_Gap(benchmark::State& state) {
  const auto f = star_function();
  const ZPoint origin(3, Int(0));
  for (auto _ : state) benchmark::DoNotOptimize(integral_biconjugate_full(f, origin));
}
BENCHMARK(BM_Biconjugate_Gap);

}  // namespace

BENCHMARK_MAIN();
