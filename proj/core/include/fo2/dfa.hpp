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
#include <string_view>
#include <vector>

#include "fo2/alphabet.hpp"
#include "fo2/regex.hpp"

namespace fo2 {

using State = std::size_t;

/// Complete deterministic finite automaton.
class Dfa {
 public:
  /// `delta` is row-major: delta[s * |alphabet| + letter]. Throws
  /// InvalidInput unless delta is total and every index is in range.
  Dfa(Alphabet alphabet, std::size_t num_states, State initial,
      std::vector<bool> finals, std::vector<State> delta);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return num_states_; }
  State initial() const noexcept { return initial_; }
  bool is_final(State s) const { return finals_[s]; }
  const std::vector<bool>& finals() const noexcept { return finals_; }

  State next(State s, std::size_t letter) const {
    return delta_[s * alphabet_.size() + letter];
  }

  /// Throws InvalidInput on a letter outside the alphabet.
  State run(std::string_view word) const;
  bool accepts(std::string_view word) const { return finals_[run(word)]; }

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  Alphabet alphabet_;
  std::size_t num_states_;
  State initial_;
  std::vector<bool> finals_;
  std::vector<State> delta_;
};

/// Minimal complete DFA with states numbered in breadth-first discovery
/// order from the initial state, letters tried in alphabet order.
Dfa minimize(const Dfa& dfa);

/// Thompson construction, subset construction, then minimize().
Dfa regex_to_min_dfa(const RegexInput& regex);

/// Line-based DFA description:
///
///   alphabet: a b
///   states: q0 q1
///   initial: q0
///   final: q0
///   q0 a q1
///   q1 b q0
///
/// `#` starts a comment line. Missing transitions go to an implicit
/// non-final sink appended as the last state. Throws ParseError with the
/// 1-based line number on malformed input.
Dfa parse_dfa_file(std::string_view text);

}  // namespace fo2
