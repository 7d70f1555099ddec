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

#include "fo2/oracle.hpp"

#include "fo2/greens.hpp"

namespace fo2 {

OracleResult oracle_relation(const FiniteMonoid& m, RankerRelationKind kind,
                             int blocks, int depth, int max_len,
                             PartitionCache* cache, std::uint64_t budget) {
  if (!m.has_gens()) {
    throw InvalidInput("the ranker oracle needs a generator map");
  }
  if (max_len < 0) throw InvalidInput("max_len must be non-negative");
  const Alphabet& sigma = m.gens()->alphabet;

  // Words and rankers grow geometrically; check the product before building.
  std::uint64_t words = 0, level = 1;
  for (int len = 0; len <= max_len; ++len) {
    words += level;
    if (words > budget) break;
    level *= sigma.size();
  }
  std::uint64_t rankers = 0;
  level = 2 * sigma.size();
  for (int d = 1; d <= depth && rankers <= budget; ++d) {
    rankers += level;
    level *= 2 * sigma.size();
  }
  if (words > budget || (rankers > 0 && words > budget / rankers)) {
    throw BudgetExceeded("ranker oracle too large: " + std::to_string(words) +
                         " words against up to " + std::to_string(rankers) +
                         " rankers");
  }

  const auto all_words = words_up_to(sigma, max_len);
  std::vector<std::size_t> local;
  const std::vector<std::size_t>* labels = nullptr;
  if (cache) {
    labels = &cache->get(sigma, kind, blocks, depth, max_len);
  } else {
    local = partition_words(RankerRelation(kind, sigma, blocks, depth), all_words);
    labels = &local;
  }

  OracleResult result;
  result.words = all_words.size();
  std::vector<std::ptrdiff_t> first(all_words.size(), -1);
  std::vector<Element> image(all_words.size());
  for (std::size_t i = 0; i < all_words.size(); ++i) {
    std::size_t c = (*labels)[i];
    Element x = eval_word(m, all_words[i]);
    if (first[c] < 0) {
      first[c] = static_cast<std::ptrdiff_t>(i);
      image[c] = x;
      ++result.classes;
    } else if (image[c] != x && result.holds) {
      result.holds = false;
      result.counterexample = {all_words[static_cast<std::size_t>(first[c])],
                               all_words[i]};
    }
  }
  return result;
}

OracleResult oracle_prop_main(const FiniteMonoid& m, int blocks, int depth,
                              int max_len, PartitionCache* cache,
                              std::uint64_t budget) {
  return oracle_relation(m, RankerRelationKind::WeisImmerman, blocks, depth,
                         max_len, cache, budget);
}

OracleSearch oracle_search(const FiniteMonoid& m, RankerRelationKind kind,
                           int blocks, int max_n, int max_len,
                           PartitionCache* cache, std::uint64_t budget) {
  OracleSearch out;
  for (int n = 1; n <= max_n; ++n) {
    out.last = oracle_relation(m, kind, blocks, n, max_len, cache, budget);
    if (out.last.holds) {
      out.n = n;
      break;
    }
  }
  return out;
}

RFactorization r_factorize(const FiniteMonoid& m, std::string_view u) {
  const GreensData g = greens(m);
  RFactorization f;
  Element prefix = m.identity();
  Word segment;
  for (char c : u) {
    Element next = m.mul(prefix, eval_word(m, std::string(1, c)));
    if (g.r_equiv(next, prefix)) {
      segment += c;
    } else {
      f.steps.emplace_back(std::move(segment), c);
      segment.clear();
    }
    prefix = next;
  }
  f.tail = std::move(segment);
  return f;
}

LFactorization l_factorize(const FiniteMonoid& m, std::string_view u) {
  const GreensData g = greens(m);
  LFactorization f;
  Element suffix = m.identity();
  Word segment;
  std::vector<std::pair<char, Word>> reversed;
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    Element next = m.mul(eval_word(m, std::string(1, *it)), suffix);
    if (g.l_equiv(next, suffix)) {
      segment.insert(segment.begin(), *it);
    } else {
      reversed.emplace_back(*it, std::move(segment));
      segment.clear();
    }
    suffix = next;
  }
  f.head = std::move(segment);
  f.steps.assign(reversed.rbegin(), reversed.rend());
  return f;
}

}  // namespace fo2
