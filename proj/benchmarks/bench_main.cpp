// Copyright 2026 The krasnerlab Authors
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

#include "krasner/audit.hpp"
#include "krasner/axioms.hpp"
#include "krasner/corpus.hpp"
#include "krasner/ideals.hpp"
#include "krasner/s_theory.hpp"

namespace {
  using namespace krasner;

  void BM_VerifyAxioms(benchmark::State& state) {
    auto const s = build_zk_ring(static_cast<std::size_t>(state.range(0)), 2, 4);
    for (auto _ : state) {
      benchmark::DoNotOptimize(verify_axioms(s, true));
    }
  }
  BENCHMARK(BM_VerifyAxioms)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

  void BM_VerifyK33(benchmark::State& state) {
    auto const s = k33();
    for (auto _ : state) {
      benchmark::DoNotOptimize(verify_axioms(s));
    }
  }
  BENCHMARK(BM_VerifyK33);

  void BM_EnumerateHyperideals(benchmark::State& state) {
    auto const s = build_zk_ring(static_cast<std::size_t>(state.range(0)), 2, 2);
    for (auto _ : state) {
      benchmark::DoNotOptimize(enumerate_hyperideals(s, HyperidealMode::kStrict));
    }
  }
  BENCHMARK(BM_EnumerateHyperideals)->Arg(6)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

  void BM_SPrimeScan(benchmark::State& state) {
    auto const s = build_zk_ring(static_cast<std::size_t>(state.range(0)), 2, 4);
    auto const ideals = enumerate_hyperideals(s, HyperidealMode::kWeak);
    auto const mults  = enumerate_multiplicative_subsets(s, true);
    for (auto _ : state) {
      std::size_t holds = 0;
      for (ElementSet i : ideals) {
        for (ElementSet m : mults) {
          holds += is_s_prime(s, i, m, HyperidealMode::kWeak).holds() ? 1 : 0;
        }
      }
      benchmark::DoNotOptimize(holds);
    }
  }
  BENCHMARK(BM_SPrimeScan)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

  void BM_Audit(benchmark::State& state) {
    auto const corpus = standard_corpus();
    for (auto _ : state) {
      benchmark::DoNotOptimize(audit_theorems(corpus));
    }
  }
  BENCHMARK(BM_Audit)->Unit(benchmark::kSecond)->Iterations(1);
}  // namespace

BENCHMARK_MAIN();
