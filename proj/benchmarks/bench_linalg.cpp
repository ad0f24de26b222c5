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

#include "ccq/pgm.hpp"
#include "ccq/rng.hpp"
#include "ccq/spectral.hpp"
#include "support/generators.hpp"

using namespace ccq;

static void BM_Kron(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  Rng rng(1);
  const ComplexMatrix a = testing::random_hermitian(dim, rng);
  const ComplexMatrix b = testing::random_hermitian(dim, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kron(a, b));
  }
}
BENCHMARK(BM_Kron)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_HermitianEig(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  Rng rng(2);
  const ComplexMatrix m = testing::random_hermitian(dim, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eig(m));
  }
}
BENCHMARK(BM_HermitianEig)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_InvSqrtPsd(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  Rng rng(3);
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = Complex(rng.normal(), rng.normal());
    }
  }
  const ComplexMatrix psd = g * g.adjoint();
  for (auto _ : state) {
    benchmark::DoNotOptimize(inv_sqrt_psd(psd, 1e-9));
  }
}
BENCHMARK(BM_InvSqrtPsd)->Arg(8)->Arg(16)->Arg(32);

static void BM_SquareRootMeasurement(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  Rng rng(4);
  std::vector<ComplexMatrix> states;
  for (int i = 0; i < 16; ++i) {
    states.push_back(testing::random_density_matrix(dim, rng));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_square_root_measurement(states));
  }
}
BENCHMARK(BM_SquareRootMeasurement)->Arg(8)->Arg(16)->Arg(32);
