// Copyright 2026 The qdmodel Authors
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

#include "qdm/equivalence.hpp"
#include "qdm/probability.hpp"
#include "qdm/random.hpp"
#include "qdm/tomography.hpp"
#include "qdm/uniqueness.hpp"

namespace {

qdm::ModelRepresentation model_for(qdm::Index dim) {
  return qdm::random_model(dim, dim * dim, 2, dim * dim, 11);
}

void BM_ProbabilityTable(benchmark::State& state) {
  const auto rep = model_for(state.range(0));
  for (auto _ : state) {
    auto table = qdm::probability_table(rep, 3);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_ProbabilityTable)->Arg(2)->Arg(3);

void BM_ChoiRoundTrip(benchmark::State& state) {
  const auto rep = model_for(state.range(0));
  const qdm::Matrix superop = rep.maps.front().superop();
  for (auto _ : state) {
    auto back =
        qdm::superop_from_choi_matrix(qdm::choi_from_superop(superop));
    benchmark::DoNotOptimize(back);
  }
}
BENCHMARK(BM_ChoiRoundTrip)->Arg(2)->Arg(4);

void BM_LgstReconstruct(benchmark::State& state) {
  const auto rep = model_for(state.range(0));
  const auto dataset = qdm::collect_dataset(
      rep, qdm::independent_states(rep), qdm::independent_effects(rep));
  for (auto _ : state) {
    auto reconstruction = qdm::lgst_reconstruct(dataset);
    benchmark::DoNotOptimize(reconstruction);
  }
}
BENCHMARK(BM_LgstReconstruct)->Arg(2)->Arg(3);

void BM_WignerRecovery(benchmark::State& state) {
  const qdm::Index dim = state.range(0);
  qdm::Rng rng(5);
  const qdm::WignerTransform s{qdm::random_unitary_matrix(dim, rng), false};
  const qdm::Matrix inverse = s.gauge().inverse();
  const auto family = qdm::projection_set(dim);
  std::vector<qdm::Matrix> images;
  for (const auto& member : family.projections)
    images.push_back(qdm::devectorize(inverse * qdm::vectorize(member.mat)));
  for (auto _ : state) {
    auto fit = qdm::recover_wigner_from_projections(images, dim);
    benchmark::DoNotOptimize(fit);
  }
}
BENCHMARK(BM_WignerRecovery)->Arg(2)->Arg(3)->Arg(4);

void BM_SuperNonDegenerate(benchmark::State& state) {
  const qdm::Index dim = state.range(0);
  qdm::Rng rng(7);
  const qdm::Matrix u =
      qdm::snd_approximant(qdm::random_unitary_matrix(dim, rng), 2);
  for (auto _ : state) {
    bool snd = qdm::super_non_degenerate(u);
    benchmark::DoNotOptimize(snd);
  }
}
BENCHMARK(BM_SuperNonDegenerate)->Arg(3)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
