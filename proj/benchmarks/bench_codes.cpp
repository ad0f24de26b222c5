// Copyright 2026 The ccqsim authors
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

#include "ccq/construction.hpp"
#include "ccq/experiment.hpp"
#include "ccq/subset_family.hpp"

using namespace ccq;

static void BM_MaxError(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const BlockChannel ch = BlockChannel::memoryless(depolarizing_channel(0.2, 2, 2), k);
  const int m = 1 << k;
  const StochasticTransmissionCode code = generate_random_code(ch, m, m, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_error(code, ch));
  }
}
BENCHMARK(BM_MaxError)->Arg(1)->Arg(2)->Arg(3);

static void BM_IdErrorSecond(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const BlockChannel ch = BlockChannel::memoryless(depolarizing_channel(0.2, 2, 2), k);
  const int m = 1 << k;
  const StochasticTransmissionCode code = generate_random_code(ch, m, m, 7);
  const FamilyBuildResult fam = build_subset_family(m, 0.5, 0.9, 3, 7);
  const SimultaneousIdCode sim = construct_sim_id_code(code, fam.family, fam.family);
  for (auto _ : state) {
    benchmark::DoNotOptimize(id_error_second(sim.id, ch));
  }
}
BENCHMARK(BM_IdErrorSecond)->Arg(2)->Arg(3);

static void BM_BuildFamilyExhaustive(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_subset_family(m, 0.5, 0.7, 1 << 20, 1));
  }
}
BENCHMARK(BM_BuildFamilyExhaustive)->Arg(8)->Arg(10)->Arg(12);

static void BM_BuildFamilyGreedy(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_subset_family(m, 0.5, 0.6, 8, 1));
  }
}
BENCHMARK(BM_BuildFamilyGreedy)->Arg(24)->Arg(32);

static void BM_RunExperiment(benchmark::State& state) {
  ExperimentConfig config;
  config.channel_json = R"({"kind": "depolarizing", "p": 0.2, "nx": 2, "ny": 2})";
  config.k = static_cast<int>(state.range(0));
  config.m_count = 1 << config.k;
  config.n_count = 1 << config.k;
  config.lambda = 0.5;
  config.epsilon1 = 0.3;
  config.epsilon2 = 0.9;
  config.delta = 0.1;
  config.seed = 11;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_experiment(config));
  }
}
BENCHMARK(BM_RunExperiment)->Arg(1)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
