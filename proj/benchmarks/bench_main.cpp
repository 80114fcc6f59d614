// Copyright 2026 The cjones Authors
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

#include "cjones/invariant.hpp"
#include "cjones/oracle.hpp"
#include "cjones/qcircuit.hpp"

namespace {

using namespace cjones;

void BM_Duality6j(benchmark::State& state) {
  const RootOfUnity r(static_cast<int>(state.range(0)));
  const QRacahArgs x{Spin{2}, Spin{2}, Spin{2}, Spin{2}, Spin{2}, Spin{2}};
  for (auto _ : state) benchmark::DoNotOptimize(duality6j(x, r));
}
BENCHMARK(BM_Duality6j)->Arg(4)->Arg(16)->Arg(64);

void BM_RepresentWord(benchmark::State& state) {
  const RootOfUnity r(static_cast<int>(state.range(0)));
  const auto w = library_word(builtin_library().get("figure-eight"), 2);
  for (auto _ : state) benchmark::DoNotOptimize(represent_word(w, r));
}
BENCHMARK(BM_RepresentWord)->Arg(3)->Arg(6)->Arg(12);

void BM_ColoredJones(benchmark::State& state) {
  const RootOfUnity r(8);
  const auto w = library_word(builtin_library().get("trefoil"), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(colored_jones(w, r));
}
BENCHMARK(BM_ColoredJones)->Arg(1)->Arg(2)->Arg(4);

void BM_Fig8ClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fig8_colored_jones_angle(n, 2.0 * kPi / n));
}
BENCHMARK(BM_Fig8ClosedForm)->Arg(10)->Arg(100)->Arg(1000);

void BM_CompileWord(benchmark::State& state) {
  const RootOfUnity r(4);
  const auto w = library_word(builtin_library().get("figure-eight"), 1);
  for (auto _ : state) benchmark::DoNotOptimize(compile_word(w, r));
}
BENCHMARK(BM_CompileWord);

}  // namespace
BENCHMARK_MAIN();
