// Copyright 2026 The qobf Authors
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

#include "qobf/decoupling.hpp"
#include "qobf/equivalence.hpp"
#include "qobf/pathsum.hpp"
#include "qobf/qcoo.hpp"
#include "qobf/random_circuit.hpp"
#include "qobf/schedule.hpp"
#include "qobf/simulator.hpp"

namespace {

qobf::Circuit bench_circuit(std::size_t n, std::int64_t gates) {
  return qobf::random_clifford_t_circuit(n, gates, 0.3, 7);
}

void BM_QcooTransform(benchmark::State &st) {
  const auto c = bench_circuit(8, st.range(0));
  const auto key = qobf::keygen(8, 1);
  for (auto _ : st) {
    benchmark::DoNotOptimize(qobf::qcoo_transform(c, key));
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_QcooTransform)->Range(64, 4096);

void BM_CircuitToPathSum(benchmark::State &st) {
  const auto c = bench_circuit(16, st.range(0));
  for (auto _ : st) {
    benchmark::DoNotOptimize(qobf::circuit_to_pathsum(c));
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_CircuitToPathSum)->Range(64, 4096);

void BM_PtdEquivalent(benchmark::State &st) {
  const auto c = bench_circuit(16, st.range(0));
  const auto a = qobf::circuit_to_pathsum(c);
  const auto b = qobf::circuit_to_pathsum(c);
  for (auto _ : st) {
    benchmark::DoNotOptimize(qobf::ptd_equivalent(a, b, qobf::kDefaultPtdSamples, 3));
  }
}
BENCHMARK(BM_PtdEquivalent)->Range(64, 4096);

void BM_InsertDd(benchmark::State &st) {
  const auto c = bench_circuit(8, st.range(0));
  const auto d = qobf::DurationTable::defaults();
  for (auto _ : st) {
    benchmark::DoNotOptimize(qobf::insert_dd(c, d, true, 5));
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_InsertDd)->Range(64, 4096);

void BM_Simulate(benchmark::State &st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto c = bench_circuit(n, 200);
  for (auto _ : st) {
    benchmark::DoNotOptimize(qobf::simulate(c));
  }
}
BENCHMARK(BM_Simulate)->DenseRange(4, 16, 4);

}  // namespace

BENCHMARK_MAIN();
