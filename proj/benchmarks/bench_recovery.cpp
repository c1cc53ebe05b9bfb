// Copyright 2026 The dcsm Authors
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

#include <random>
#include <vector>

#include "dcsm/analysis.hpp"
#include "dcsm/bch.hpp"
#include "dcsm/binary_designs.hpp"
#include "dcsm/recovery.hpp"

namespace {

using namespace dcsm;

struct Fixture {
  SensingMatrix matrix;
  Dictionary dictionary;
  ShiftGroupPartition partition;
  Correlator correlator;

  explicit Fixture(SensingMatrix a)
      : matrix(std::move(a)),
        dictionary(Dictionary::from_matrix(matrix)),
        partition(shift_group_partition(matrix)),
        correlator(dictionary, partition) {}
};

const Fixture& bipolar(int mtilde, int i) {
  // one fixture per parameter pair used below
  static const Fixture small(assemble_bipolar_matrix(build_code_spec(6, 2)));
  static const Fixture large(assemble_bipolar_matrix(build_code_spec(10, 5)));
  return mtilde == 6 && i == 2 ? small : large;
}

std::vector<double> gaussian_vector(std::size_t m) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> normal;
  std::vector<double> r(m);
  for (auto& v : r) v = normal(rng);
  return r;
}

void BM_Correlate(benchmark::State& state, int mtilde, int i, CorrelationPath path) {
  const auto& f = bipolar(mtilde, i);
  const auto r = gaussian_vector(f.dictionary.rows());
  std::vector<double> out(f.dictionary.cols());
  for (auto _ : state) {
    f.correlator.correlate(r, path, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}
BENCHMARK_CAPTURE(BM_Correlate, bch63_direct, 6, 2, CorrelationPath::direct);
BENCHMARK_CAPTURE(BM_Correlate, bch63_fast, 6, 2, CorrelationPath::circulant_fast);
BENCHMARK_CAPTURE(BM_Correlate, bch1023_direct, 10, 5, CorrelationPath::direct);
BENCHMARK_CAPTURE(BM_Correlate, bch1023_fast, 10, 5, CorrelationPath::circulant_fast);

void BM_Coherence(benchmark::State& state) {
  const auto a = assemble_bipolar_matrix(build_code_spec(6, 2));
  for (auto _ : state) benchmark::DoNotOptimize(coherence(a));
}
BENCHMARK(BM_Coherence)->Unit(benchmark::kMillisecond);

void BM_DevoreCoherence(benchmark::State& state) {
  const auto a = devore_matrix(8, 2);
  for (auto _ : state) benchmark::DoNotOptimize(coherence(a));
}
BENCHMARK(BM_DevoreCoherence)->Unit(benchmark::kMillisecond);

void BM_Omp(benchmark::State& state, CorrelationPath path) {
  const auto& f = bipolar(6, 2);
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto s = random_sparse_signal(f.dictionary.cols(), k, 5, 0);
  const auto y = measure(f.dictionary, s);
  for (auto _ : state) benchmark::DoNotOptimize(omp(f.correlator, y, k, path));
}
BENCHMARK_CAPTURE(BM_Omp, direct, CorrelationPath::direct)->Arg(4)->Arg(12)->Arg(20);
BENCHMARK_CAPTURE(BM_Omp, fast, CorrelationPath::circulant_fast)->Arg(4)->Arg(12)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
