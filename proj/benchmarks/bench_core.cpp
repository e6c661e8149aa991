// Copyright 2026 The leglab Authors
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

#include "leglab/families.hpp"
#include "leglab/projection.hpp"
#include "leglab/verifier.hpp"

namespace {

void LegendreRecurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto p = leglab::families::legendre_recurrence(n);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(LegendreRecurrence)->DenseRange(4, 20, 4);

void LegendreRodrigues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto p = leglab::families::legendre_rodrigues(n);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(LegendreRodrigues)->DenseRange(4, 20, 4);

void ExpandBernoulli(benchmark::State& state) {
  const auto route = static_cast<leglab::projection::Route>(state.range(1));
  const auto poly = leglab::families::bernoulli_poly(static_cast<int>(state.range(0)));
  const int bound = poly.degree().value_or(0);
  for (auto _ : state) {
    auto expansion = leglab::projection::expand(poly, bound, route);
    benchmark::DoNotOptimize(expansion);
  }
}
BENCHMARK(ExpandBernoulli)
    ->ArgsProduct({{6, 12}, {0, 1, 2}})
    ->ArgNames({"n", "route"});

void VerifyBernoulliConvTheorem(benchmark::State& state) {
  leglab::verifier::IdentityParams params;
  params.n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto report = leglab::verifier::verify(
        leglab::verifier::IdentityId::ThmBernoulliConvLegendre, params);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(VerifyBernoulliConvTheorem)->Arg(6)->Arg(12);

void FullReport(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (const auto id : leglab::verifier::all_identities()) {
      auto reports = leglab::verifier::verify_range(id, n_max);
      benchmark::DoNotOptimize(reports);
    }
  }
}
BENCHMARK(FullReport)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
