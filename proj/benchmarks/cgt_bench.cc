// Copyright 2026 The cgtherm Authors.
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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "cgt/bounds.h"
#include "cgt/domineering.h"
#include "cgt/random_games.h"
#include "cgt/snort.h"
#include "cgt/thermal.h"

namespace cgt {
namespace {

// Each iteration uses a fresh store so memo tables start cold.

void BM_CanonicalRandom(benchmark::State& state) {
  for (auto _ : state) {
    GameStore store;
    std::mt19937_64 rng(42);
    for (int i = 0; i < state.range(0); ++i) {
      benchmark::DoNotOptimize(store.Canonical(RandomGame(store, rng)));
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CanonicalRandom)->Arg(100)->Arg(1000);

void BM_ThermographRandom(benchmark::State& state) {
  for (auto _ : state) {
    GameStore store;
    Thermal thermal(store);
    std::mt19937_64 rng(43);
    RandomGameParams params{.depth = 4, .max_options = 3, .leaf_range = 6};
    for (int i = 0; i < state.range(0); ++i) {
      benchmark::DoNotOptimize(
          thermal.Temperature(RandomGame(store, rng, params)));
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ThermographRandom)->Arg(100)->Arg(1000);

void BM_Domineering2xn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GameStore store;
    Thermal thermal(store);
    Domineering dom(store);
    benchmark::DoNotOptimize(
        thermal.Temperature(dom.Value(DomBoard::Rectangle(2, n))));
  }
}
BENCHMARK(BM_Domineering2xn)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_SnortGrid2xn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GameStore store;
    Thermal thermal(store);
    Snort snort(store);
    benchmark::DoNotOptimize(
        thermal.Temperature(snort.Value(SnortBoard::Grid(2, n))));
  }
}
BENCHMARK(BM_SnortGrid2xn)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_SnakeScan(benchmark::State& state) {
  std::vector<DomBoard> snakes = EnumerateSnakes(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    GameStore store;
    Thermal thermal(store);
    BoundsLab lab(thermal);
    Domineering dom(store);
    std::vector<GameHandle> forms;
    for (const DomBoard& b : snakes) forms.push_back(dom.Form(b));
    benchmark::DoNotOptimize(lab.ClassScan(forms, "snakes"));
  }
  state.counters["snakes"] = static_cast<double>(snakes.size());
}
BENCHMARK(BM_SnakeScan)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_MinimalConfusionK(benchmark::State& state) {
  for (auto _ : state) {
    GameStore store;
    Thermal thermal(store);
    BoundsLab lab(thermal);
    Snort snort(store);
    GameHandle g = snort.Form(SnortBoard::Path(static_cast<int>(state.range(0))));
    benchmark::DoNotOptimize(
        lab.MinimalConfusionK(g, Dyadic(1).Scaled(-2), store.Up()));
  }
}
BENCHMARK(BM_MinimalConfusionK)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace cgt

BENCHMARK_MAIN();
