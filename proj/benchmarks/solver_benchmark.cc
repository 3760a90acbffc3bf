// Copyright 2026 The Seqgame Authors
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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "seqgame/game.h"
#include "seqgame/oracle.h"
#include "seqgame/relation.h"
#include "seqgame/solver.h"
#include "seqgame/strategy.h"

namespace seqgame {
namespace {

// Complete tree of the given depth and arity; owners and outcomes cycle.
Game CompleteGame(int depth, int arity, int agents, int outcomes,
                  int* counter) {
  if (depth == 0) {
    return Game::Leaf(OutcomeId("o" + std::to_string((*counter)++ % outcomes)));
  }
  const AgentId owner("a" + std::to_string(depth % agents));
  Game first = CompleteGame(depth - 1, arity, agents, outcomes, counter);
  std::vector<Game> rest;
  for (int i = 1; i < arity; ++i) {
    rest.push_back(CompleteGame(depth - 1, arity, agents, outcomes, counter));
  }
  return Game::Node(owner, std::move(first), std::move(rest));
}

std::vector<OutcomeId> Outcomes(int n) {
  std::vector<OutcomeId> v;
  for (int i = 0; i < n; ++i) v.emplace_back("o" + std::to_string(i));
  return v;
}

// Random subset of a random ranking: acyclic, rarely total.
Relation Acyclic(std::mt19937_64& rng, const std::vector<OutcomeId>& c,
                 double density) {
  std::vector<OutcomeId> ranking = c;
  std::shuffle(ranking.begin(), ranking.end(), rng);
  std::bernoulli_distribution keep(density);
  std::vector<Relation::Pair> pairs;
  for (std::size_t i = 0; i < ranking.size(); ++i)
    for (std::size_t j = i + 1; j < ranking.size(); ++j)
      if (keep(rng)) pairs.emplace_back(ranking[i], ranking[j]);
  return Relation::FromPairs(pairs);
}

PreferenceFamily Family(int agents, int outcomes, double density) {
  std::mt19937_64 rng(7);
  const auto c = Outcomes(outcomes);
  PreferenceFamily f;
  for (int a = 0; a < agents; ++a) {
    f.Set(AgentId("a" + std::to_string(a)), Acyclic(rng, c, density));
  }
  return f;
}

void BM_BackwardInduction(benchmark::State& state) {
  int counter = 0;
  Game g = CompleteGame(static_cast<int>(state.range(0)), 3, 3, 8, &counter);
  PreferenceFamily f = Family(3, 8, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(BackwardInduction(g, f));
  }
  state.counters["leaves"] = counter;
}
BENCHMARK(BM_BackwardInduction)->DenseRange(2, 7);

void BM_SolveSpe(benchmark::State& state) {
  int counter = 0;
  Game g = CompleteGame(static_cast<int>(state.range(0)), 3, 3, 8, &counter);
  PreferenceFamily f = Family(3, 8, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveSpe(g, f));
  }
  state.counters["leaves"] = counter;
}
BENCHMARK(BM_SolveSpe)->DenseRange(2, 7);

void BM_IsSpe(benchmark::State& state) {
  int counter = 0;
  Game g = CompleteGame(static_cast<int>(state.range(0)), 3, 3, 8, &counter);
  PreferenceFamily f = Family(3, 8, 0.3);
  StrategyProfile s = SolveSpe(g, f);
  for (auto _ : state) {
    benchmark::DoNotOptimize(IsSpe(f, s));
  }
}
BENCHMARK(BM_IsSpe)->DenseRange(2, 6);

void BM_OracleAll(benchmark::State& state) {
  int counter = 0;
  // Depth 2, arity k: k^(k+1) profiles.
  Game g = CompleteGame(2, static_cast<int>(state.range(0)), 2, 6, &counter);
  PreferenceFamily f = Family(2, 6, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(FindEquilibria(g, f, EquilibriumFilter::kAll));
  }
  state.counters["profiles"] = static_cast<double>(ProfileCount(g));
}
BENCHMARK(BM_OracleAll)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_LinearExtension(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const auto c = Outcomes(static_cast<int>(state.range(0)));
  Relation r = Acyclic(rng, c, 0.2);
  for (auto _ : state) {
    Relation ext = LinearExtension(r, c);
    benchmark::DoNotOptimize(ext.Holds(c.front(), c.back()));
  }
}
BENCHMARK(BM_LinearExtension)->RangeMultiplier(2)->Range(8, 128);

}  // namespace
}  // namespace seqgame

BENCHMARK_MAIN();
