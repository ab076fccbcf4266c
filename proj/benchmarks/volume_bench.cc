// Copyright 2026 The Unicon Authors
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

#include <memory>
#include <vector>

#include <benchmark/benchmark.h>

#include "unicon/ball_region.h"
#include "unicon/instances.h"
#include "unicon/volumetry.h"

namespace unicon {
namespace {

UniformContractionInstance Instance(const char* norm, int d, int n) {
  return GenInstance(n, 1.0, std::make_shared<const NormBody>(ParseNorm(norm, d)), Regime::kSuper,
                     7);
}

void BM_McVolume(benchmark::State& state, const char* norm, int d) {
  const UniformContractionInstance inst = Instance(norm, d, 1 << d);
  const BallRegion region(RegionKind::kMolecule, inst.p, inst.r, inst.norm);
  const uint64_t samples = static_cast<uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(McVolume(region, {samples, 1, 0.99, 1}).value);
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(samples));
}
BENCHMARK_CAPTURE(BM_McVolume, euclid3, "euclid", 3)->Arg(100000);
BENCHMARK_CAPTURE(BM_McVolume, linf3, "linf", 3)->Arg(100000);
BENCHMARK_CAPTURE(BM_McVolume, lp3_3, "lp:3", 3)->Arg(100000);

void BM_RHullMembership(benchmark::State& state, const char* norm) {
  const UniformContractionInstance inst = Instance(norm, 2, 9);
  const BallRegion hull(RegionKind::kRHull, inst.p, inst.r, inst.norm);
  const uint64_t samples = 20000;
  for (auto _ : state) benchmark::DoNotOptimize(McVolume(hull, {samples, 2, 0.99, 1}).value);
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(samples));
}
BENCHMARK_CAPTURE(BM_RHullMembership, euclid, "euclid");
BENCHMARK_CAPTURE(BM_RHullMembership, hexagon, "hexagon:4");

void BM_ExactArea2d(benchmark::State& state, RegionKind kind) {
  const UniformContractionInstance inst = Instance("hexagon:5", 2, static_cast<int>(state.range(0)));
  const BallRegion region(kind, inst.p, inst.r, inst.norm);
  for (auto _ : state) benchmark::DoNotOptimize(ExactArea2d(region).value);
}
BENCHMARK_CAPTURE(BM_ExactArea2d, molecule, RegionKind::kMolecule)->Arg(9)->Arg(49);
BENCHMARK_CAPTURE(BM_ExactArea2d, polyhedron, RegionKind::kPolyhedron)->Arg(9)->Arg(49);
BENCHMARK_CAPTURE(BM_ExactArea2d, hull, RegionKind::kRHull)->Arg(9)->Arg(49);

void BM_QuermassKubota(benchmark::State& state) {
  const UniformContractionInstance inst = Instance("euclid", 3, 8);
  const BallRegion region(RegionKind::kMolecule, inst.p, inst.r, inst.norm);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(QuermassKubota(region, k, {32, 5000, 3, 0.99, 1}).value);
}
BENCHMARK(BM_QuermassKubota)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace unicon
