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

#pragma once

#include <string_view>
#include <vector>

#include "fo2/corpus.hpp"
#include "fo2/dfa.hpp"
#include "fo2/monoid.hpp"
#include "fo2/regex.hpp"

namespace fo2::testing {

inline FiniteMonoid syntactic(std::string_view regex) {
  return transition_monoid(regex_to_min_dfa(parse_regex(regex)));
}

inline std::vector<FiniteMonoid> corpus_monoids(std::uint64_t seed, std::size_t count,
                                                bool require_da = false,
                                                std::size_t max_states = 4,
                                                std::size_t letters = 2) {
  CorpusOptions o;
  o.seed = seed;
  o.count = count;
  o.require_da = require_da;
  o.max_states = max_states;
  o.letters = letters;
  std::vector<FiniteMonoid> out;
  for (const Dfa& d : generate_corpus(o)) out.push_back(transition_monoid(d));
  return out;
}

}  // namespace fo2::testing
