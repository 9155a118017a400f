// Copyright 2026 The qesd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "qesd/sweep.hpp"

namespace {

qesd::SweepSpec surface_spec(std::size_t points) {
  qesd::SweepSpec s;
  s.vary = qesd::SweepAxis::r;
  s.lo = 1.0 / 3.0;
  s.hi = 1.0;
  s.points = points;
  s.werner = {0.0, M_PI / 4};
  s.bath = {0.25, 1.0};
  s.t_max = 5.0;
  s.steps = 101;
  return s;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto spec = surface_spec(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qesd::sweep_surface_serial(spec));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 101);
}

void BM_SweepParallel(benchmark::State& state) {
  const auto spec = surface_spec(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qesd::sweep_surface(spec));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 101);
}

struct RegionGrid {
  std::vector<double> alpha;
  std::vector<double> r;
};

RegionGrid region_grid(std::size_t n) {
  return {qesd::linspace(0.0, 2.0 * M_PI, n), qesd::linspace(0.0, 1.0, n)};
}

void BM_RegionSerial(benchmark::State& state) {
  const auto g = region_grid(static_cast<std::size_t>(state.range(0)));
  const qesd::BathParams bath{0.25, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(qesd::region_map_serial(g.alpha, g.r, bath));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_RegionParallel(benchmark::State& state) {
  const auto g = region_grid(static_cast<std::size_t>(state.range(0)));
  const qesd::BathParams bath{0.25, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(qesd::region_map(g.alpha, g.r, bath));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(101)->Arg(401)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(101)->Arg(401)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RegionSerial)->Arg(21)->Arg(41)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegionParallel)->Arg(21)->Arg(41)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
