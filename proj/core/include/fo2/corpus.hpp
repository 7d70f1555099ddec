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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fo2/dfa.hpp"

namespace fo2 {

struct CorpusOptions {
  std::uint64_t seed = 7;
  std::size_t count = 50;
  std::size_t max_states = 4;
  std::size_t letters = 2;
  /// Keep only DFAs whose syntactic monoid lies in DA.
  bool require_da = false;
  /// Oracle search bounds for the ranker checks.
  int oracle_max_n = 8;
  int oracle_max_len = 6;
  /// Run the word-level suites (factorization lemmas, congruence sampling,
  /// condensed semantics). Skipped when count is 0.
  bool word_suites = true;
};

/// `count` pairwise distinct minimal DFAs with at most `max_states` states
/// over the first `letters` of "abcdefgh", drawn from mt19937_64 seeded
/// with `seed`. Returns fewer when the attempt budget runs out.
std::vector<Dfa> generate_corpus(const CorpusOptions& options);

struct PropertyTally {
  std::string name;
  bool gating = true;  // false for tested hypotheses
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;  // identity checks over budget
  std::string first_failure;
};

struct StraubingTally {
  int level = 0;
  std::size_t compared = 0;
  std::size_t agree = 0;
  std::size_t skipped = 0;
};

struct CorpusReport {
  CorpusOptions options;
  std::size_t monoids = 0;
  std::size_t in_da = 0;
  std::vector<std::size_t> level_histogram;  // index m counts Level(m); 0 = NotFO2
  std::size_t exceeded = 0;
  std::vector<PropertyTally> properties;
  std::vector<StraubingTally> straubing;

  /// No gating property failed.
  bool ok() const;
  const PropertyTally* find(const std::string& name) const;
  std::string to_text() const;
};

CorpusReport run_corpus(const CorpusOptions& options);

/// Property names used in the report.
namespace corpus_property {
inline constexpr const char* kDualRoute = "dual-route agreement R_m/L_m (m=2,3)";
inline constexpr const char* kLevelRoutes = "fo2_level quotient = identities (max_m=3)";
inline constexpr const char* kLevelOne = "Level(1) iff J-trivial";
inline constexpr const char* kLevelTwo = "R_2 = R-trivial, L_2 = L-trivial";
inline constexpr const char* kMonotone = "monotonicity R_m u L_m in R_m+1 n L_m+1 (m=1..3)";
inline constexpr const char* kInDa = "R_m/L_m members lie in DA";
inline constexpr const char* kMirror = "mirror duality";
inline constexpr const char* kCongruences = "~K ~D ~LI are congruences";
inline constexpr const char* kLiftEq = "lift lemma s R sx, x ~K y => sx = sy (and dual)";
inline constexpr const char* kDaLemma = "DA alphabet lemma (words <= 4)";
inline constexpr const char* kOracle = "==_{m,n} in kernel for some n <= bound";
inline constexpr const char* kGenerate = "|>_{m,n} / <|_{m,n} in kernel for some n <= bound";
inline constexpr const char* kCombi = "|> / <| factorization: factors keep the relation at n-1";
inline constexpr const char* kCombiDual = "|> / <| factorization: far factor in dual relation at (m-1,n-1)";
inline constexpr const char* kOneRanker = "a-left/a-right factors of ==_{m,n}";
inline constexpr const char* kCross = "middle factor of ==_{m,n}";
inline constexpr const char* kSubwords = "==_{1,n} keeps subwords of length <= n";
inline constexpr const char* kRankerCongruence = "|> and <| sampled congruence";
inline constexpr const char* kCondensedDefined = "condensed implies defined";
inline constexpr const char* kCondensedSemantics = "interval chain = no-overrun semantics";
}  // namespace corpus_property

}  // namespace fo2
