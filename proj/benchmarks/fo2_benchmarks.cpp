// Copyright 2026 The fo2hier Authors
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

#include "fo2/corpus.hpp"
#include "fo2/dfa.hpp"
#include "fo2/greens.hpp"
#include "fo2/ranker_relations.hpp"
#include "fo2/regex.hpp"
#include "fo2/varieties.hpp"

namespace {

const char* const kRegexes[] = {"a(a|b)*", "(ab)*", "(a|b)*ab(a|b)*b", "(a|b)*a(a|b)(a|b)(a|b)"};

fo2::Dfa dfa_of(int i) {
  return fo2::regex_to_min_dfa(fo2::parse_regex(kRegexes[i]));
}

void BM_TransitionMonoid(benchmark::State& state) {
  const fo2::Dfa d = dfa_of(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fo2::transition_monoid(d).size());
}
BENCHMARK(BM_TransitionMonoid)->DenseRange(0, 3);

void BM_Greens(benchmark::State& state) {
  const fo2::FiniteMonoid m = fo2::transition_monoid(dfa_of(static_cast<int>(state.range(0))));
  state.counters["elements"] = static_cast<double>(m.size());
  for (auto _ : state) benchmark::DoNotOptimize(fo2::greens(m).j_class.size());
}
BENCHMARK(BM_Greens)->DenseRange(0, 3);

void BM_Fo2LevelCorpus(benchmark::State& state) {
  fo2::CorpusOptions o;
  o.count = 50;
  o.require_da = true;
  std::vector<fo2::FiniteMonoid> ms;
  for (const auto& d : fo2::generate_corpus(o)) ms.push_back(fo2::transition_monoid(d));
  for (auto _ : state) {
    for (const auto& m : ms) benchmark::DoNotOptimize(fo2::fo2_level(m).value);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ms.size()));
}
BENCHMARK(BM_Fo2LevelCorpus);

void BM_RankerPartition(benchmark::State& state) {
  const int mn = static_cast<int>(state.range(0));
  const fo2::Alphabet ab("ab");
  const fo2::RankerRelation rel(fo2::RankerRelationKind::WeisImmerman, ab, mn, mn);
  const auto words = fo2::words_up_to(ab, 6);
  for (auto _ : state) benchmark::DoNotOptimize(fo2::partition_words(rel, words).size());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}
BENCHMARK(BM_RankerPartition)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
