// Copyright 2026 The Postulatum Authors.
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

// Serial reference versus the OpenMP trial runner, per proposition.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>

#include "postulatum/verifier.hpp"

namespace {

using namespace postulatum::verify;

const char* const kProps[] = {"i27_i29", "fp", "i30", "4.1", "4.2", "4.3", "bolyai"};

template <VerificationReport (*Run)(const TrialConfig&)>
void BM_Trials(benchmark::State& state) {
  const TrialConfig cfg{kProps[state.range(0)], 1000, 42, {}};
  for (auto _ : state) {
    const VerificationReport r = Run(cfg);
    benchmark::DoNotOptimize(r.worst_margin);
    if (r.failures != 0) state.SkipWithError("trial failures");
  }
  state.SetLabel(kProps[state.range(0)]);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.trials));
}

BENCHMARK(BM_Trials<run_trials_serial>)->Name("serial")->DenseRange(0, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Trials<run_trials>)->Name("openmp")->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
