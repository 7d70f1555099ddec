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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fo2/monoid.hpp"
#include "fo2/ranker_relations.hpp"

namespace fo2 {

/// Default cap on words x rankers evaluated by one oracle run.
inline constexpr std::uint64_t kDefaultOracleBudget = 200'000'000;

struct OracleResult {
  bool holds = true;
  /// Two related words with different images, shortlex-first pair.
  std::optional<std::pair<Word, Word>> counterexample;
  std::size_t words = 0;
  std::size_t classes = 0;
};

/// Checks that `kind`_{m,n} is contained in the kernel of the morphism of
/// M on all words of length <= max_len over the generator alphabet. Words
/// are partitioned by relation signature, then phi must be constant on each
/// class. Throws InvalidInput without generators and BudgetExceeded when
/// words x rankers exceeds `budget`. `cache` may be null.
OracleResult oracle_relation(const FiniteMonoid& m, RankerRelationKind kind,
                             int blocks, int depth, int max_len,
                             PartitionCache* cache = nullptr,
                             std::uint64_t budget = kDefaultOracleBudget);

/// ==_{m,n} contained in ==_phi on words up to max_len.
OracleResult oracle_prop_main(const FiniteMonoid& m, int blocks, int depth,
                              int max_len, PartitionCache* cache = nullptr,
                              std::uint64_t budget = kDefaultOracleBudget);

struct OracleSearch {
  std::optional<int> n;  // least depth that passed
  OracleResult last;     // result for n, or for max_n when none passed
};

/// Tries n = 1 .. max_n and stops at the first success.
OracleSearch oracle_search(const FiniteMonoid& m, RankerRelationKind kind,
                           int blocks, int max_n, int max_len,
                           PartitionCache* cache = nullptr,
                           std::uint64_t budget = kDefaultOracleBudget);

/// u = s_1 a_1 s_2 a_2 ... s_k a_k tail, where each a_i makes the running
/// product drop strictly in the R-order and each following segment keeps
/// the R-class.
struct RFactorization {
  std::vector<std::pair<Word, char>> steps;  // (s_i, a_i)
  Word tail;                                 // s_{k+1}
};

/// v = head b_1 t_2 ... b_k t_{k+1}, the right-to-left dual with the
/// L-order: the suffix product drops strictly at each b_i.
struct LFactorization {
  Word head;                                 // t_1
  std::vector<std::pair<char, Word>> steps;  // (b_i, t_{i+1})
};

RFactorization r_factorize(const FiniteMonoid& m, std::string_view u);
LFactorization l_factorize(const FiniteMonoid& m, std::string_view u);

}  // namespace fo2
